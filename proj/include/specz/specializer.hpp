#pragma once

#include <random>
#include <span>
#include <vector>

#include "specz/modules.hpp"

namespace specz {

using Point = std::vector<Rational>;

inline void require_arity(const RingPtr& ring, std::span<const Rational> alpha) {
  if (alpha.size() != ring->nparams())
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(alpha.size()) + " coordinates, ring has " +
                                       std::to_string(ring->nparams()) + " parameters");
}

inline std::pair<Rational, Certificate> specialize_scalar(const RatFunc& a, std::span<const Rational> alpha) {
  Certificate cert = Certificate::of(a.den(), Provenance::Denominator);
  return {a.eval(alpha), std::move(cert)};
}

/// Product of the coefficient denominators of f.
inline Certificate denominator_certificate(const FPoly& f) {
  Certificate c;
  for (const auto& t : f.terms()) c.add(t.c.den(), Provenance::Denominator);
  return c;
}

inline std::pair<QMatrix, Certificate> specialize_matrix(const FMatrix& a, std::span<const Rational> alpha) {
  require_arity(a.ring(), alpha);
  RingPtr target = specialized_ring(a.ring());
  Certificate cert;
  QMatrix out(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cert.merge(denominator_certificate(a.at(i, j)));
      out.at(i, j) = eval_poly(a.at(i, j), alpha, target);
    }
  return {std::move(out), std::move(cert)};
}

/// Generators evaluated at alpha (no Groebner basis involved).
inline QIdeal specialize_generators(const FIdeal& i, std::span<const Rational> alpha) {
  require_arity(i.ring(), alpha);
  RingPtr target = specialized_ring(i.ring());
  std::vector<QPoly> gens;
  for (const auto& g : i.gens()) gens.push_back(eval_poly(g, alpha, target));
  return QIdeal(target, gens);
}

struct SpecializedIdeal {
  QIdeal ideal;
  Certificate cert;
  FIdeal source;
  Point alpha;
};

inline Certificate denominator_certificate(const FMatrix& a) {
  Certificate c;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.merge(denominator_certificate(a.at(i, j)));
  return c;
}

/// Cleared reduced basis of I with a certificate covering the basis data
/// and every pivot of the Groebner computation.
inline CertifiedBasis certify_ideal(const FIdeal& i) {
  PivotScope scope;
  CertifiedBasis cb = reduced_basis(i);
  for (const auto& g : i.gens()) cb.cert.merge(denominator_certificate(g));
  cb.cert.merge(scope.certificate());
  return cb;
}

inline Certificate ideal_certificate(const FIdeal& i) { return certify_ideal(i).cert; }

/// I_alpha from the cleared reduced basis of I.
inline SpecializedIdeal specialize_ideal(const FIdeal& i, std::span<const Rational> alpha) {
  require_arity(i.ring(), alpha);
  CertifiedBasis cb = certify_ideal(i);
  Certificate cert = cb.cert;
  if (cert.vanishes_at(alpha))
    fail(ErrorCode::BadPoint, "certificate " + cert.str(i.ring()->params()) + " vanishes at the point");
  RingPtr target = specialized_ring(i.ring());
  std::vector<QPoly> gens;
  for (const auto& g : cb.cleared) gens.push_back(eval_poly(g, alpha, target));
  return {QIdeal(target, gens), std::move(cert), i, Point(alpha.begin(), alpha.end())};
}

struct SpecializedModule {
  QModule module;
  Certificate cert;
};

inline SpecializedModule specialize_module(const FModule& l, std::span<const Rational> alpha) {
  require_arity(l.ring(), alpha);
  if (denominator_certificate(l.presentation()).vanishes_at(alpha))
    fail(ErrorCode::BadPoint, "a presentation denominator vanishes at the point");
  auto [m, cert] = specialize_matrix(l.presentation(), alpha);
  return {QModule(std::move(m)), std::move(cert)};
}

/// Seeded rejection sampler over the integer grid [-bound, bound]^m.
class PointSampler {
 public:
  static constexpr int kMaxRejections = 1000;

  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  Point next(const Certificate& cert, std::size_t nparams, long bound) {
    if (bound < 1) fail(ErrorCode::InvalidArgument, "sampling bound must be at least 1");
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
      Point p;
      for (std::size_t k = 0; k < nparams; ++k) p.emplace_back(dist(rng_));
      if (!cert.vanishes_at(p)) return p;
    }
    fail(ErrorCode::ExhaustedSampling,
         "no point off the certificate after " + std::to_string(kMaxRejections) + " rejections");
  }

 private:
  std::mt19937_64 rng_;
};

inline Point sample_point(const Certificate& cert, std::size_t nparams, long bound, std::uint64_t seed) {
  return PointSampler(seed).next(cert, nparams, bound);
}

/// Runs f under a pivot scope; returns its result with the recorded
/// certificate.
template <class F>
auto certified(F&& f) {
  PivotScope scope;
  auto result = f();
  return std::make_pair(std::move(result), scope.certificate());
}

inline std::string point_str(std::span<const Rational> alpha) {
  std::string s = "(";
  for (std::size_t k = 0; k < alpha.size(); ++k) s += (k ? ", " : "") + alpha[k].str();
  return s + ")";
}

}  // namespace specz
