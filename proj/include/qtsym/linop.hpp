#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "qtsym/symfunc.hpp"

namespace qtsym {

/// Raised when an operator with a partial domain is applied outside it.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear operator on symmetric functions, given by its (memoized) action on
/// Schur functions. Copies share the same action and memo table.
class LinOp {
public:
    using Action = std::function<SymF(const Partition&)>;
    using Domain = std::function<bool(const Partition&)>;

    LinOp();
    LinOp(Action action, std::optional<int> degree_shift, std::string name = "", Domain domain = nullptr);

    /// Image of s_lambda. Throws DomainError outside a partial domain.
    const SymF& on_schur(const Partition& lambda) const;
    SymF operator()(const SymF& p) const;

    std::optional<int> degree_shift() const { return impl_->shift; }
    const std::string& name() const { return impl_->name; }
    bool partial() const { return static_cast<bool>(impl_->domain); }
    bool in_domain(const Partition& lambda) const { return !impl_->domain || impl_->domain(lambda); }

private:
    struct Impl {
        Action action;
        std::optional<int> shift;
        std::string name;
        Domain domain;
        mutable std::mutex mu;
        mutable std::map<Partition, SymF> memo;
    };
    std::shared_ptr<Impl> impl_;
};

LinOp identity_op();
LinOp zero_op();
/// (v * w)(P) = v(w(P)).
LinOp compose(const LinOp& v, const LinOp& w);
LinOp add(const LinOp& v, const LinOp& w);
LinOp scale(const QTPoly& c, const LinOp& v);
inline LinOp operator*(const LinOp& v, const LinOp& w) { return compose(v, w); }
inline LinOp operator+(const LinOp& v, const LinOp& w) { return add(v, w); }
inline LinOp operator-(const LinOp& v, const LinOp& w) { return add(v, scale(QTPoly(-1L), w)); }
inline LinOp operator*(const QTPoly& c, const LinOp& v) { return scale(c, v); }

LinOp multiplication_op(const SymF& f);
LinOp skewing_op(const SymF& f);

/// Equal action on every s_lambda with |lambda| <= max_degree.
bool operators_equal(const LinOp& v, const LinOp& w, int max_degree);
/// First partition (by degree, then lexicographically decreasing) where the
/// actions differ, if any.
std::optional<Partition> first_difference(const LinOp& v, const LinOp& w, int max_degree);

}  // namespace qtsym
