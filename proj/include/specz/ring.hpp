#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specz/monomial.hpp"
#include "specz/param_poly.hpp"

namespace specz {

/// Q(u_1..u_m)[X_1..X_n] with a fixed monomial order. Rings are immutable
/// and shared; equality is structural.
class Ring {
 public:
  Ring(std::vector<std::string> params, std::vector<std::string> vars,
       OrderKind kind = OrderKind::GRevLex, int block = 0)
      : params_(std::move(params)), vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "too many variables");
    if (params_.size() > kMaxParams) fail(ErrorCode::InvalidArgument, "too many parameters");
    order_ = MonomialOrder{kind, static_cast<int>(vars_.size()), block};
  }

  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t nparams() const { return params_.size(); }
  const MonomialOrder& order() const { return order_; }
  TermOrder term_order() const { return TermOrder{order_, false, {}}; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }
  int param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (params_[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.params_ == b.params_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

  std::string str() const {
    std::string s = "Q";
    if (!params_.empty()) {
      s += "(";
      for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + params_[i];
      s += ")";
    }
    s += "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    s += "]";
    return s;
  }

 private:
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> params, std::vector<std::string> vars,
                         OrderKind kind = OrderKind::GRevLex) {
  return std::make_shared<const Ring>(std::move(params), std::move(vars), kind);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) fail(ErrorCode::RingMismatch, a->str() + " vs " + b->str());
}

/// Ring with the parameters dropped: the target of specialization.
inline RingPtr specialized_ring(const RingPtr& r) {
  return std::make_shared<const Ring>(std::vector<std::string>{}, r->vars(), r->order().kind,
                                      r->order().block);
}

}  // namespace specz
