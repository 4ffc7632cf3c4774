// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvk/rational.hpp"

namespace mvk::ltb {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

// The m x n sampling basis (2 <= n <= m): row i interpolates the n nodes
// (j-1)/(n-1) with the tent profile at t = (i-1)/(m-1). In every row the at
// most two active entries sum to 1, and columns tile [0,1].
class BasisMatrix {
 public:
  BasisMatrix(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const;  // 0-based

 private:
  std::size_t m_, n_;
  std::vector<Rational> p_;  // row-major
};

// Forward pass: g_j = max_i (f_i odot p_ij). Input entries must lie in [0,1].
std::vector<Rational> lt_forward(const std::vector<Rational>& f, const BasisMatrix& p);

// Residual pass: f_i = min_j (p_ij -> g_j) with x -> y = min(1, 1-x+y).
std::vector<Rational> lt_residual(const std::vector<Rational>& g, const BasisMatrix& p);

// Raster with exact [0,1] samples, channel-planar.
struct Raster {
  std::size_t width = 0, height = 0, channels = 1;
  unsigned maxval = 255;
  std::vector<std::vector<Rational>> planes;  // channels x (width*height), row-major

  const Rational& at(std::size_t c, std::size_t x, std::size_t y) const {
    return planes[c][y * width + x];
  }
  bool same_pixels(const Raster& other) const;
};

// PGM (P2/P5) and PPM (P3/P6), maxval <= 255.
Raster read_pnm(std::istream& in);
Raster read_pnm_file(const std::string& path);
void write_pnm(const Raster& r, std::ostream& out, bool binary = true);
void write_pnm_file(const Raster& r, const std::string& path, bool binary = true);

// Container: magic "LTB1"; little-endian u32 width, height, channels, a, b,
// c, d; payload of ceil(w/a)*ceil(h/b)*c*d*channels quantized bytes, channel-
// planar, block-row-major, row-major inside each block.
struct LtbFile {
  std::uint32_t width = 0, height = 0, channels = 0;
  std::uint32_t a = 0, b = 0, c = 0, d = 0;  // a x b blocks to c x d coefficients
  std::vector<std::uint8_t> payload;

  Rational rho() const;  // cd/ab
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;
  static LtbFile read(std::istream& in);
  static LtbFile read_file(const std::string& path);
};

std::uint8_t quantize_byte(const Rational& v);   // round(255 v), v in [0,1]
Rational dequantize_byte(std::uint8_t q);        // q/255

// Blockwise forward transform with zero padding on partial blocks, then byte
// quantization into the container. Block dims: a, c across width; b, d
// across height; 2 <= cd <= ab required per block shape.
LtbFile compress(const Raster& r, std::size_t a, std::size_t b,
                 std::size_t c, std::size_t d, unsigned threads = 1);

// Residual pass per block from dequantized coefficients, cropped to size.
Raster decompress(const LtbFile& f, unsigned threads = 1);

// The exact rational round trip, no quantization anywhere: forward then
// residual per block. Running it twice is byte-stable (second pass lossless).
Raster reconstruct_exact(const Raster& r, std::size_t a, std::size_t b,
                         std::size_t c, std::size_t d, unsigned threads = 1);

// 10 log10(1 / MSE) over all channels; +infinity for identical rasters.
double psnr(const Raster& x, const Raster& y);

}  // namespace mvk::ltb
