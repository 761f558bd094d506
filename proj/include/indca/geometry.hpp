#pragma once

#include <optional>

#include "indca/lp.hpp"
#include "indca/model.hpp"
#include "indca/types.hpp"

namespace indca {

// Activity pattern alpha of C = {Ax >= b}. The pseudo-face is
//   {x | A_alpha x = b_alpha, A_albar x > b_albar}
// and the associated face relaxes the strict part to >=.
struct PseudoFaceDescriptor {
  IndexSet alpha;
  bool is_empty = true;
  std::optional<int> face_recession_dim_hint;
};

// Normal cone of C on a pseudo-face: conic hull of {-A_i^T, i in alpha}.
// An empty generator list is the cone {0}.
struct NormalCone {
  std::vector<Vector> generators;
};

// Recession cone of a face in constraint form {v | eq v = 0, ineq v >= 0};
// is_trivial marks the cone {0}, i.e. a bounded face.
struct RecessionCone {
  Matrix eq;
  Matrix ineq;
  bool is_trivial = false;
};

IndexSet active_set(const IqpProblem& p, const Vector& x,
                    double act_tol = 1e-9);

// The descriptor for one activity pattern, with nonemptiness certified by the
// slack-maximization LP  max s  s.t.  A_alpha x = b_alpha,
// A_albar x >= b_albar + s*1, s <= 1  (nonempty iff the optimum is positive).
PseudoFaceDescriptor pseudo_face(const IqpProblem& p, const IndexSet& alpha);

// All activity patterns with a nonempty pseudo-face, ordered by bitmask.
// Throws TooManyConstraints above the enumeration cap.
std::vector<PseudoFaceDescriptor> enumerate_pseudo_faces(
    const IqpProblem& p, int enumeration_cap = 20);

NormalCone normal_cone_generators(const IqpProblem& p, const IndexSet& alpha);

RecessionCone recession_cone(const IqpProblem& p, const IndexSet& alpha);

// Whether {v | eq v = 0, ineq v >= 0} = {0}, decided by 2n probes that pin
// one coordinate to +-1 inside the slab [-1,1]^n. Any cone containing a
// nonzero vector contains one of that form after rescaling.
bool cone_is_trivial(const Matrix& eq, const Matrix& ineq);

// First nonzero cone vector found by the probes (infinity-norm 1), if any.
std::optional<Vector> nonzero_cone_vector(const Matrix& eq, const Matrix& ineq);

Vector project_onto_C(const IqpProblem& p, const Vector& u,
                      const IndexSet& warm_working_set = {});

}  // namespace indca
