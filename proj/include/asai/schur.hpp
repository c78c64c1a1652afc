#ifndef ASAI_SCHUR_HPP
#define ASAI_SCHUR_HPP

#include <optional>
#include <string>
#include <vector>

#include "asai/laurent.hpp"
#include "asai/partition.hpp"
#include "asai/scalar.hpp"

namespace asai {

// Evaluates Schur polynomials at a fixed parameter tuple. The default route
// is the determinant of complete homogeneous values (Jacobi-Trudi); the
// ratio-of-alternants route is an independent cross-check that requires
// pairwise distinct parameters.
class SchurEvaluator {
public:
    explicit SchurEvaluator(std::vector<Scalar> params);

    long arity() const { return static_cast<long>(params_.size()); }
    long q() const { return q_; }
    const std::vector<Scalar>& params() const { return params_; }

    // h_k at the parameters; 0 for k < 0.
    const Scalar& complete_homogeneous(long k) const;

    Scalar jacobi_trudi(const Partition& lam) const;
    Scalar bialternant(const Partition& lam) const;

private:
    std::vector<Scalar> params_;
    long q_;
    std::vector<Scalar> elem_;        // e_0..e_n
    mutable std::vector<Scalar> hom_; // h_0.., grown on demand
    Scalar zero_;
};

// Exact determinant by Gaussian elimination over the scalar field.
Scalar determinant(std::vector<std::vector<Scalar>> m, long q);

Scalar schur_value(const Partition& lam, const std::vector<Scalar>& params);

enum class SchurIdentity { cauchy, littlewood, littlewood_even };

struct IdentityReport {
    SchurIdentity kind;
    long depth;
    bool match;
    std::optional<long> mismatch_degree;
    std::optional<Scalar> lhs, rhs; // coefficients at the first mismatch
};

// Compares the graded sum of Schur values against the closed-form product,
// both expanded to X^depth. `u` is required for the cauchy kind and ignored
// otherwise.
IdentityReport identity_check(SchurIdentity kind, const std::vector<Scalar>& t,
                              const std::vector<Scalar>* u, long depth);

// The closed-form side of each identity.
EulerProduct identity_product(SchurIdentity kind, const std::vector<Scalar>& t,
                              const std::vector<Scalar>* u);

} // namespace asai

#endif
