#pragma once

#include "core/types.hpp"

namespace lapis {

// Frame-wise linear measurement operator: maps a Casorati matrix
// (pixels x frames) to a flat sample vector and back via the exact adjoint
// under the unweighted inner products.
class FrameOperator {
public:
  virtual ~FrameOperator() = default;
  virtual int pixels() const = 0;
  virtual int frames() const = 0;
  virtual Eigen::Index samples() const = 0;
  virtual CVec forward(const CMat& x) const = 0;
  virtual CMat adjoint(const CVec& b) const = 0;
};

}  // namespace lapis
