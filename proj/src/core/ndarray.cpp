#include "core/ndarray.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "core/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "array file I/O assumes a little-endian host");

namespace lapis {

namespace {
constexpr char kMagic[4] = {'B', 'S', 'T', 'M'};
constexpr uint8_t kVersion = 1;
constexpr int kMaxDims = 4;

uint64_t shape_product(const std::vector<uint64_t>& shape) {
  uint64_t n = 1;
  for (uint64_t e : shape) n *= e;
  return n;
}
}  // namespace

void NdArray::check_shape(const std::vector<uint64_t>& shape) {
  if (shape.empty() || shape.size() > kMaxDims)
    throw DimensionError("array rank must be between 1 and 4, got " +
                         std::to_string(shape.size()));
  for (uint64_t e : shape)
    if (e == 0) throw DimensionError("array extents must be positive");
}

NdArray NdArray::real(std::vector<uint64_t> shape) {
  check_shape(shape);
  NdArray a;
  a.dtype_ = Dtype::Real64;
  a.rdata_.assign(shape_product(shape), 0.0);
  a.shape_ = std::move(shape);
  return a;
}

NdArray NdArray::complex(std::vector<uint64_t> shape) {
  check_shape(shape);
  NdArray a;
  a.dtype_ = Dtype::Complex128;
  a.cdata_.assign(shape_product(shape), cd(0, 0));
  a.shape_ = std::move(shape);
  return a;
}

uint64_t NdArray::size() const { return shape_product(shape_); }

bool NdArray::operator==(const NdArray& other) const {
  if (dtype_ != other.dtype_ || shape_ != other.shape_) return false;
  if (dtype_ == Dtype::Real64)
    return std::memcmp(rdata_.data(), other.rdata_.data(), rdata_.size() * sizeof(double)) == 0;
  return std::memcmp(cdata_.data(), other.cdata_.data(), cdata_.size() * sizeof(cd)) == 0;
}

NdArray NdArray::from_cmat(const CMat& m) {
  NdArray a = complex({static_cast<uint64_t>(m.cols()), static_cast<uint64_t>(m.rows())});
  std::memcpy(a.cdata_.data(), m.data(), sizeof(cd) * m.size());
  return a;
}

NdArray NdArray::from_mat(const Mat& m) {
  NdArray a = real({static_cast<uint64_t>(m.cols()), static_cast<uint64_t>(m.rows())});
  std::memcpy(a.rdata_.data(), m.data(), sizeof(double) * m.size());
  return a;
}

NdArray NdArray::from_vec(const Vec& v) {
  NdArray a = real({static_cast<uint64_t>(v.size())});
  std::memcpy(a.rdata_.data(), v.data(), sizeof(double) * v.size());
  return a;
}

NdArray NdArray::from_cvec(const CVec& v) {
  NdArray a = complex({static_cast<uint64_t>(v.size())});
  std::memcpy(a.cdata_.data(), v.data(), sizeof(cd) * v.size());
  return a;
}

CMat NdArray::to_cmat() const {
  if (dtype_ != Dtype::Complex128 || ndim() != 2)
    throw DimensionError("expected a 2-D complex128 array");
  CMat m(shape_[1], shape_[0]);
  std::memcpy(m.data(), cdata_.data(), sizeof(cd) * m.size());
  return m;
}

Mat NdArray::to_mat() const {
  if (dtype_ != Dtype::Real64 || ndim() != 2)
    throw DimensionError("expected a 2-D real64 array");
  Mat m(shape_[1], shape_[0]);
  std::memcpy(m.data(), rdata_.data(), sizeof(double) * m.size());
  return m;
}

Vec NdArray::to_vec() const {
  if (dtype_ != Dtype::Real64 || ndim() != 1)
    throw DimensionError("expected a 1-D real64 array");
  Vec v(shape_[0]);
  std::memcpy(v.data(), rdata_.data(), sizeof(double) * v.size());
  return v;
}

CVec NdArray::to_cvec() const {
  if (dtype_ != Dtype::Complex128 || ndim() != 1)
    throw DimensionError("expected a 1-D complex128 array");
  CVec v(shape_[0]);
  std::memcpy(v.data(), cdata_.data(), sizeof(cd) * v.size());
  return v;
}

void write_array(const std::string& path, const NdArray& a) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(kMagic, 4);
  uint8_t header[3] = {kVersion, static_cast<uint8_t>(a.dtype()),
                       static_cast<uint8_t>(a.ndim())};
  f.write(reinterpret_cast<const char*>(header), 3);
  for (uint64_t e : a.shape()) f.write(reinterpret_cast<const char*>(&e), 8);
  if (a.dtype() == Dtype::Real64)
    f.write(reinterpret_cast<const char*>(a.rdata().data()),
            static_cast<std::streamsize>(a.rdata().size() * sizeof(double)));
  else
    f.write(reinterpret_cast<const char*>(a.cdata().data()),
            static_cast<std::streamsize>(a.cdata().size() * sizeof(cd)));
  if (!f) throw IoError("short write: " + path);
}

NdArray read_array(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);

  char magic[4];
  if (!f.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("bad magic in " + path);
  uint8_t version = 0, dtype = 0, ndim = 0;
  if (!f.read(reinterpret_cast<char*>(&version), 1))
    throw FormatError("truncated version field in " + path);
  if (version != kVersion)
    throw FormatError("unsupported version " + std::to_string(version) + " in " + path);
  if (!f.read(reinterpret_cast<char*>(&dtype), 1))
    throw FormatError("truncated dtype field in " + path);
  if (dtype > 1) throw FormatError("unknown dtype code " + std::to_string(dtype) + " in " + path);
  if (!f.read(reinterpret_cast<char*>(&ndim), 1))
    throw FormatError("truncated ndim field in " + path);
  if (ndim < 1 || ndim > kMaxDims)
    throw FormatError("ndim out of range in " + path);

  std::vector<uint64_t> shape(ndim);
  for (int i = 0; i < ndim; ++i) {
    if (!f.read(reinterpret_cast<char*>(&shape[i]), 8))
      throw FormatError("truncated shape[" + std::to_string(i) + "] in " + path);
    if (shape[i] == 0)
      throw FormatError("zero extent shape[" + std::to_string(i) + "] in " + path);
  }

  NdArray a = dtype == 0 ? NdArray::real(shape) : NdArray::complex(shape);
  char* dst = dtype == 0 ? reinterpret_cast<char*>(a.rdata().data())
                         : reinterpret_cast<char*>(a.cdata().data());
  std::streamsize bytes = static_cast<std::streamsize>(
      a.size() * (dtype == 0 ? sizeof(double) : sizeof(cd)));
  if (!f.read(dst, bytes)) throw FormatError("truncated payload in " + path);
  return a;
}

}  // namespace lapis
