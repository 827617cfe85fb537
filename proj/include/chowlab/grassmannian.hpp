#pragma once

#include "chowlab/bundle.hpp"
#include "chowlab/errors.hpp"

#include <vector>

namespace chowlab {

// Degeneracy carrying the full computed mu vector (zeros included), so
// callers can report it.
class UPrimeDegeneracyError : public DegeneracyError {
public:
    UPrimeDegeneracyError(const std::string& what, std::vector<Rational> mu)
        : DegeneracyError(what), mu_(std::move(mu)) {}
    const std::vector<Rational>& mu() const { return mu_; }

private:
    std::vector<Rational> mu_;
};

// Stable-range Grassmannian model G(d, N): the Chow ring truncated at degree
// d is free on c_1(Q)..c_d(Q) (variables q1..qd) once N >= 2d+1.
struct GrassmannianModel {
    int d = 0;
    int N = 0;
    Alphabet alphabet; // q1..qd, weights 1..d
    int kd = 0;        // d(N-d-1), the rank of the normal bundle of X in G
};

GrassmannianModel make_grassmannian(int d, int N);

struct TangentClassResult {
    BundleClass tangent;      // c(T_G) truncated at degree d, rank d(N-d)
    std::vector<Rational> nu; // leading coefficients: c_j(T_G) = nu_j q_j + lower
};

// c(T_G) = c(Hom(S, Q)) with c(S) = c(Q)^{-1}; checks every nu_j != 0.
TangentClassResult grassmannian_tangent(const GrassmannianModel& model);

// Twisted normal-bundle classes U'_j of a degree-l cut of X inside G(d, N),
// expressed over {c_1..c_d} (tangent classes of X) and {c'_1..c'_d}
// (restricted classes of Q). Each U'_j = mu_j c'_j + tail in earlier c'.
struct UPrimeResult {
    int d = 0, N = 0, l = 0;
    Alphabet alphabet;            // c1..cd then c'1..c'd
    std::vector<GradedPoly> polys; // U'_1..U'_d
    std::vector<Rational> mu;
};

// Chain: restrict c(T_G) to X, divide by c(T_X), twist by -l c'_1 at rank
// k_d, take graded pieces. Throws DegeneracyError (with the full mu vector in
// the message) when some mu_j vanishes, e.g. (d,N,l) = (1,4,2).
UPrimeResult compute_u_prime(int d, int N, int l);

} // namespace chowlab
