#include "qtsym/linop.hpp"

namespace qtsym {

namespace {

std::optional<int> sum_shift(std::optional<int> a, std::optional<int> b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}

std::optional<int> same_shift(std::optional<int> a, std::optional<int> b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
}

}  // namespace

LinOp::LinOp() : LinOp([](const Partition& l) { return SymF::s(l); }, 0, "id") {}

LinOp::LinOp(Action action, std::optional<int> degree_shift, std::string name, Domain domain)
    : impl_(std::make_shared<Impl>()) {
    impl_->action = std::move(action);
    impl_->shift = degree_shift;
    impl_->name = std::move(name);
    impl_->domain = std::move(domain);
}

const SymF& LinOp::on_schur(const Partition& lambda) const {
    {
        std::lock_guard lock(impl_->mu);
        if (auto it = impl_->memo.find(lambda); it != impl_->memo.end()) return it->second;
    }
    if (impl_->domain && !impl_->domain(lambda))
        throw DomainError("operator " + impl_->name + " is not defined on s" + lambda.to_string());
    SymF v = impl_->action(lambda);
    std::lock_guard lock(impl_->mu);
    return impl_->memo.emplace(lambda, std::move(v)).first->second;
}

SymF LinOp::operator()(const SymF& p) const {
    SymF s = to_schur(p);
    SymF out(Basis::schur);
    for (const auto& [lambda, c] : s.terms()) {
        const SymF& img = on_schur(lambda);
        if (img.is_zero()) continue;
        out += (c == QTPoly(1L)) ? img : img * c;
    }
    return out;
}

LinOp identity_op() { return LinOp(); }

LinOp zero_op() {
    return LinOp([](const Partition&) { return SymF(); }, std::nullopt, "0");
}

LinOp compose(const LinOp& v, const LinOp& w) {
    return LinOp([v, w](const Partition& l) { return v(w.on_schur(l)); }, sum_shift(v.degree_shift(), w.degree_shift()),
                 v.name() + "*" + w.name(), w.partial() ? LinOp::Domain([w](const Partition& l) { return w.in_domain(l); })
                                                        : nullptr);
}

LinOp add(const LinOp& v, const LinOp& w) {
    LinOp::Domain dom = nullptr;
    if (v.partial() || w.partial())
        dom = [v, w](const Partition& l) { return v.in_domain(l) && w.in_domain(l); };
    return LinOp([v, w](const Partition& l) { return v.on_schur(l) + w.on_schur(l); },
                 same_shift(v.degree_shift(), w.degree_shift()), "(" + v.name() + "+" + w.name() + ")", dom);
}

LinOp scale(const QTPoly& c, const LinOp& v) {
    LinOp::Domain dom = nullptr;
    if (v.partial()) dom = [v](const Partition& l) { return v.in_domain(l); };
    return LinOp([c, v](const Partition& l) { return v.on_schur(l) * c; }, v.degree_shift(),
                 "(" + c.to_string() + ")" + v.name(), dom);
}

LinOp multiplication_op(const SymF& f) {
    SymF sf = to_schur(f);
    std::optional<int> shift;
    if (sf.is_homogeneous()) shift = sf.max_degree();
    return LinOp([sf](const Partition& l) { return multiply(sf, SymF::s(l)); }, shift, "mul");
}

LinOp skewing_op(const SymF& f) {
    SymF sf = to_schur(f);
    std::optional<int> shift;
    if (sf.is_homogeneous()) shift = -sf.max_degree();
    return LinOp([sf](const Partition& l) { return skew(sf, SymF::s(l)); }, shift, "skew");
}

std::optional<Partition> first_difference(const LinOp& v, const LinOp& w, int max_degree) {
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& l : partitions_of(n))
            if (!(v.on_schur(l) == w.on_schur(l))) return l;
    return std::nullopt;
}

bool operators_equal(const LinOp& v, const LinOp& w, int max_degree) {
    return !first_difference(v, w, max_degree).has_value();
}

}  // namespace qtsym
