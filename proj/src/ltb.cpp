// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/ltb.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mvk/parallel.hpp"

namespace mvk::ltb {

BasisMatrix::BasisMatrix(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (n < 2) throw std::invalid_argument("basis needs at least 2 columns");
  if (n > m) throw std::invalid_argument("basis needs n <= m");
  p_.resize(m * n);
  long M = long(m), N = long(n);
  for (long i = 1; i <= M; ++i) {
    Rational t = make_rational(i - 1, M - 1 == 0 ? 1 : M - 1);
    for (long j = 1; j <= N; ++j) {
      Rational lo = make_rational(j - 2, N - 1);   // left node
      Rational mid = make_rational(j - 1, N - 1);  // peak
      Rational hi = make_rational(j, N - 1);       // right node
      Rational v(0);
      if (t >= lo && t <= mid) {
        v = Rational(N - 1) * t - Rational(j - 2);  // ascending edge
      } else if (t > mid && t <= hi) {
        v = Rational(j) - Rational(N - 1) * t;  // descending edge
      }
      p_[std::size_t(i - 1) * n_ + std::size_t(j - 1)] = v;
    }
  }
  // partition of unity: every row sums to exactly 1 with at most two nonzeros
  for (std::size_t i = 0; i < m_; ++i) {
    Rational sum(0);
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& v = p_[i * n_ + j];
      if (!in_unit_interval(v)) throw std::logic_error("basis entry escaped [0,1]");
      if (v != 0) ++nonzero;
      sum += v;
    }
    if (sum != 1) throw std::logic_error("basis row does not sum to 1");
    if (nonzero > 2) throw std::logic_error("basis row has more than two active entries");
  }
}

const Rational& BasisMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= m_ || j >= n_) throw std::invalid_argument("basis index out of range");
  return p_[i * n_ + j];
}

std::vector<Rational> lt_forward(const std::vector<Rational>& f, const BasisMatrix& p) {
  if (f.size() != p.m()) throw std::invalid_argument("input length must match basis rows");
  for (const auto& v : f)
    if (!in_unit_interval(v)) throw std::invalid_argument("input value outside [0,1]");
  std::vector<Rational> g(p.n(), Rational(0));
  for (std::size_t j = 0; j < p.n(); ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < p.m(); ++i) {
      Rational t = unit_odot(f[i], p.at(i, j));
      if (t > acc) acc = t;
    }
    g[j] = acc;
  }
  return g;
}

std::vector<Rational> lt_residual(const std::vector<Rational>& g, const BasisMatrix& p) {
  if (g.size() != p.n()) throw std::invalid_argument("input length must match basis cols");
  for (const auto& v : g)
    if (!in_unit_interval(v)) throw std::invalid_argument("input value outside [0,1]");
  std::vector<Rational> f(p.m(), Rational(1));
  for (std::size_t i = 0; i < p.m(); ++i) {
    Rational acc(1);
    for (std::size_t j = 0; j < p.n(); ++j) {
      // residuum p -> g = min(1, 1 - p + g)
      Rational t = Rational(1) - p.at(i, j) + g[j];
      if (t > 1) t = 1;
      if (t < acc) acc = t;
    }
    f[i] = acc;
  }
  return f;
}

bool Raster::same_pixels(const Raster& other) const {
  return width == other.width && height == other.height && channels == other.channels &&
         planes == other.planes;
}

namespace {

int next_header_int(std::istream& in) {
  // skips whitespace and '#' comments
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in.get();
    } else {
      break;
    }
  }
  int v = -1;
  if (!(in >> v)) throw IoError("malformed image header");
  return v;
}

}  // namespace

Raster read_pnm(std::istream& in) {
  char p = 0, kind = 0;
  in.get(p);
  in.get(kind);
  if (p != 'P' || (kind != '2' && kind != '3' && kind != '5' && kind != '6'))
    throw IoError("unsupported image format (want P2/P3/P5/P6)");
  bool color = kind == '3' || kind == '6';
  bool binary = kind == '5' || kind == '6';

  int w = next_header_int(in);
  int h = next_header_int(in);
  int maxval = next_header_int(in);
  if (w <= 0 || h <= 0) throw IoError("bad image dimensions");
  if (maxval <= 0 || maxval > 255) throw IoError("maxval must be in 1..255");

  Raster r;
  r.width = std::size_t(w);
  r.height = std::size_t(h);
  r.channels = color ? 3 : 1;
  r.maxval = unsigned(maxval);
  r.planes.assign(r.channels, std::vector<Rational>(r.width * r.height));

  std::size_t samples = r.width * r.height * r.channels;
  if (binary) {
    in.get();  // the single whitespace after maxval
    std::vector<char> buf(samples);
    in.read(buf.data(), long(samples));
    if (std::size_t(in.gcount()) != samples) throw IoError("truncated pixel data");
    for (std::size_t i = 0; i < samples; ++i) {
      unsigned v = static_cast<unsigned char>(buf[i]);
      if (v > unsigned(maxval)) throw IoError("sample above maxval");
      std::size_t pixel = i / r.channels, ch = i % r.channels;
      r.planes[ch][pixel] = make_rational(long(v), maxval);
    }
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      long v = -1;
      if (!(in >> v)) throw IoError("truncated pixel data");
      if (v < 0 || v > maxval) throw IoError("sample out of range");
      std::size_t pixel = i / r.channels, ch = i % r.channels;
      r.planes[ch][pixel] = make_rational(v, maxval);
    }
  }
  return r;
}

Raster read_pnm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_pnm(in);
}

std::uint8_t quantize_byte(const Rational& v) {
  if (!in_unit_interval(v)) throw std::invalid_argument("value outside [0,1]");
  Rational scaled = v * 255 + make_rational(1, 2);
  mpz_class q = scaled.get_num() / scaled.get_den();  // floor for nonnegative
  return std::uint8_t(q.get_ui());
}

Rational dequantize_byte(std::uint8_t q) { return make_rational(q, 255); }

void write_pnm(const Raster& r, std::ostream& out, bool binary) {
  bool color = r.channels == 3;
  if (!color && r.channels != 1) throw IoError("only 1- or 3-channel rasters");
  out << (color ? (binary ? "P6" : "P3") : (binary ? "P5" : "P2")) << "\n"
      << r.width << " " << r.height << "\n255\n";
  std::size_t pixels = r.width * r.height;
  for (std::size_t p = 0; p < pixels; ++p)
    for (std::size_t ch = 0; ch < r.channels; ++ch) {
      std::uint8_t q = quantize_byte(r.planes[ch][p]);
      if (binary) {
        out.put(char(q));
      } else {
        out << unsigned(q) << ((ch + 1 == r.channels) ? "\n" : " ");
      }
    }
}

void write_pnm_file(const Raster& r, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_pnm(r, out, binary);
  if (!out) throw IoError("failed writing " + path);
}

Rational LtbFile::rho() const {
  return make_rational(long(c) * long(d), long(a) * long(b));
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(char((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    int c = in.get();
    if (c == EOF) throw IoError("truncated container header");
    v |= std::uint32_t(c & 0xff) << (8 * i);
  }
  return v;
}

std::size_t ceil_div(std::size_t x, std::size_t y) { return (x + y - 1) / y; }

}  // namespace

void LtbFile::write(std::ostream& out) const {
  out.write("LTB1", 4);
  put_u32(out, width);
  put_u32(out, height);
  put_u32(out, channels);
  put_u32(out, a);
  put_u32(out, b);
  put_u32(out, c);
  put_u32(out, d);
  out.write(reinterpret_cast<const char*>(payload.data()), long(payload.size()));
}

void LtbFile::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write(out);
  if (!out) throw IoError("failed writing " + path);
}

LtbFile LtbFile::read(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != "LTB1")
    throw IoError("bad container magic");
  LtbFile f;
  f.width = get_u32(in);
  f.height = get_u32(in);
  f.channels = get_u32(in);
  f.a = get_u32(in);
  f.b = get_u32(in);
  f.c = get_u32(in);
  f.d = get_u32(in);
  if (f.width == 0 || f.height == 0 || (f.channels != 1 && f.channels != 3))
    throw IoError("bad container dimensions");
  if (f.a == 0 || f.b == 0 || std::size_t(f.c) * f.d < 2 ||
      std::size_t(f.c) * f.d > std::size_t(f.a) * f.b)
    throw IoError("bad block shape");
  std::size_t expected = ceil_div(f.width, f.a) * ceil_div(f.height, f.b) *
                         std::size_t(f.c) * f.d * f.channels;
  f.payload.resize(expected);
  in.read(reinterpret_cast<char*>(f.payload.data()), long(expected));
  if (std::size_t(in.gcount()) != expected) throw IoError("truncated payload");
  if (in.peek() != EOF) throw IoError("trailing bytes after payload");
  return f;
}

LtbFile LtbFile::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read(in);
}

namespace {

// zero-padded block, row-major: f[row*bw + col]. Zero fill keeps the second
// compress+reconstruct pass bit-identical on partial edge blocks: the padded
// block only grows below the first reconstruction, and the reconstruction
// operator is a monotone idempotent closure, so both passes agree.
std::vector<Rational> extract_block(const Raster& r, std::size_t ch, std::size_t x0,
                                    std::size_t y0, std::size_t bw, std::size_t bh) {
  std::vector<Rational> f(bw * bh);
  for (std::size_t row = 0; row < bh; ++row) {
    std::size_t y = y0 + row;
    for (std::size_t col = 0; col < bw; ++col) {
      std::size_t x = x0 + col;
      if (x < r.width && y < r.height) f[row * bw + col] = r.at(ch, x, y);
    }
  }
  return f;
}

void check_block_shape(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a == 0 || b == 0 || c == 0 || d == 0)
    throw std::invalid_argument("block dimensions must be positive");
  if (c * d < 2) throw std::invalid_argument("target block needs at least 2 coefficients");
  if (c * d > a * b)
    throw std::invalid_argument("target block must not exceed the source block");
}

}  // namespace

LtbFile compress(const Raster& r, std::size_t a, std::size_t b, std::size_t c,
                 std::size_t d, unsigned threads) {
  check_block_shape(a, b, c, d);
  BasisMatrix basis(a * b, c * d);
  std::size_t bx = ceil_div(r.width, a), by = ceil_div(r.height, b);

  LtbFile out;
  out.width = std::uint32_t(r.width);
  out.height = std::uint32_t(r.height);
  out.channels = std::uint32_t(r.channels);
  out.a = std::uint32_t(a);
  out.b = std::uint32_t(b);
  out.c = std::uint32_t(c);
  out.d = std::uint32_t(d);
  out.payload.resize(bx * by * c * d * r.channels);

  std::size_t blocks = r.channels * by * bx;
  parallel_chunks(blocks, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::size_t ch = t / (by * bx);
      std::size_t rest = t % (by * bx);
      std::size_t yb = rest / bx, xb = rest % bx;
      auto f = extract_block(r, ch, xb * a, yb * b, a, b);
      auto g = lt_forward(f, basis);
      std::size_t base = t * c * d;
      for (std::size_t i = 0; i < c * d; ++i) out.payload[base + i] = quantize_byte(g[i]);
    }
  });
  return out;
}

Raster decompress(const LtbFile& file, unsigned threads) {
  std::size_t a = file.a, b = file.b, c = file.c, d = file.d;
  BasisMatrix basis(a * b, c * d);
  std::size_t bx = ceil_div(file.width, a), by = ceil_div(file.height, b);

  Raster r;
  r.width = file.width;
  r.height = file.height;
  r.channels = file.channels;
  r.maxval = 255;
  r.planes.assign(r.channels, std::vector<Rational>(r.width * r.height));

  std::size_t blocks = r.channels * by * bx;
  parallel_chunks(blocks, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::size_t ch = t / (by * bx);
      std::size_t rest = t % (by * bx);
      std::size_t yb = rest / bx, xb = rest % bx;
      std::vector<Rational> g(c * d);
      std::size_t base = t * c * d;
      for (std::size_t i = 0; i < c * d; ++i) g[i] = dequantize_byte(file.payload[base + i]);
      auto f = lt_residual(g, basis);
      for (std::size_t row = 0; row < b; ++row) {
        std::size_t y = yb * b + row;
        if (y >= r.height) break;
        for (std::size_t col = 0; col < a; ++col) {
          std::size_t x = xb * a + col;
          if (x >= r.width) break;
          r.planes[ch][y * r.width + x] = f[row * a + col];
        }
      }
    }
  });
  return r;
}

Raster reconstruct_exact(const Raster& r, std::size_t a, std::size_t b, std::size_t c,
                         std::size_t d, unsigned threads) {
  check_block_shape(a, b, c, d);
  BasisMatrix basis(a * b, c * d);
  std::size_t bx = ceil_div(r.width, a), by = ceil_div(r.height, b);

  Raster out;
  out.width = r.width;
  out.height = r.height;
  out.channels = r.channels;
  out.maxval = r.maxval;
  out.planes.assign(out.channels, std::vector<Rational>(out.width * out.height));

  std::size_t blocks = r.channels * by * bx;
  parallel_chunks(blocks, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::size_t ch = t / (by * bx);
      std::size_t rest = t % (by * bx);
      std::size_t yb = rest / bx, xb = rest % bx;
      auto f = extract_block(r, ch, xb * a, yb * b, a, b);
      auto fhat = lt_residual(lt_forward(f, basis), basis);
      for (std::size_t row = 0; row < b; ++row) {
        std::size_t y = yb * b + row;
        if (y >= out.height) break;
        for (std::size_t col = 0; col < a; ++col) {
          std::size_t x = xb * a + col;
          if (x >= out.width) break;
          out.planes[ch][y * out.width + x] = fhat[row * a + col];
        }
      }
    }
  });
  return out;
}

double psnr(const Raster& x, const Raster& y) {
  if (x.width != y.width || x.height != y.height || x.channels != y.channels)
    throw std::invalid_argument("psnr needs rasters of equal shape");
  Rational sum(0);
  std::size_t samples = x.width * x.height * x.channels;
  for (std::size_t ch = 0; ch < x.channels; ++ch)
    for (std::size_t p = 0; p < x.width * x.height; ++p) {
      Rational diff = x.planes[ch][p] - y.planes[ch][p];
      sum += diff * diff;
    }
  if (sum == 0) return std::numeric_limits<double>::infinity();
  Rational mse = sum / Rational(long(samples));
  return -10.0 * std::log10(mse.get_d());
}

}  // namespace mvk::ltb
