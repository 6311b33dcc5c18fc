#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace lapis {

enum class Dtype : uint8_t { Real64 = 0, Complex128 = 1 };

// Dense row-major array, up to 4 dimensions, real64 or complex128.
// This is the one container that crosses module and process boundaries;
// everything numeric inside the library lives in Eigen types.
class NdArray {
public:
  NdArray() = default;
  static NdArray real(std::vector<uint64_t> shape);
  static NdArray complex(std::vector<uint64_t> shape);

  Dtype dtype() const { return dtype_; }
  const std::vector<uint64_t>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  uint64_t size() const;  // product of extents

  std::vector<double>& rdata() { return rdata_; }
  const std::vector<double>& rdata() const { return rdata_; }
  std::vector<cd>& cdata() { return cdata_; }
  const std::vector<cd>& cdata() const { return cdata_; }

  bool operator==(const NdArray& other) const;

  // Eigen bridges. A (frames, n) array on disk maps to an n x frames
  // column-major matrix in memory with identical byte layout.
  static NdArray from_cmat(const CMat& m);        // shape (cols, rows)
  static NdArray from_mat(const Mat& m);          // shape (cols, rows)
  static NdArray from_vec(const Vec& v);          // shape (len)
  static NdArray from_cvec(const CVec& v);        // shape (len)
  CMat to_cmat() const;  // 2-D complex (d0, d1) -> d1 x d0 matrix
  Mat to_mat() const;
  Vec to_vec() const;
  CVec to_cvec() const;

private:
  Dtype dtype_ = Dtype::Real64;
  std::vector<uint64_t> shape_;
  std::vector<double> rdata_;
  std::vector<cd> cdata_;

  static void check_shape(const std::vector<uint64_t>& shape);
};

// Bit-exact on-disk format: magic "BSTM", version u8 = 1, dtype u8,
// ndim u8, then ndim extents as u64 little-endian, then the payload
// little-endian row-major with complex128 stored as (real, imag) pairs.
void write_array(const std::string& path, const NdArray& a);
NdArray read_array(const std::string& path);

}  // namespace lapis
