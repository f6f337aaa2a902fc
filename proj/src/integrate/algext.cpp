#include "liouville/integrate/algext.hpp"

namespace liouville {

namespace {

Poly<GaussRat> to_constant_poly(const TPoly& p) {
    std::vector<GaussRat> c;
    for (const auto& a : p.coeffs()) {
        if (!a.is_constant()) throw std::logic_error("factor of a constant polynomial with non-constant coefficients");
        c.push_back(a.is_zero() ? GaussRat() : a.constant());
    }
    return Poly<GaussRat>(std::move(c));
}

}  // namespace

TPoly lift_constant_poly(const Poly<GaussRat>& p) {
    std::vector<TowerElem> c;
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return TPoly(std::move(c));
}

AlgElem::AlgElem(TPoly p, Modulus m) : p_(std::move(p)), mod_(std::move(m)) {
    if (mod_ && p_.degree() >= mod_->degree()) p_ = rem(p_, *mod_);
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    return AlgElem(a.p_ + b.p_, a.mod_ ? a.mod_ : b.mod_, true);
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    AlgElem::Modulus m = a.mod_ ? a.mod_ : b.mod_;
    TPoly p = a.p_ * b.p_;
    if (m && p.degree() >= m->degree()) p = rem(p, *m);
    return AlgElem(std::move(p), std::move(m), true);
}

AlgElem operator/(const AlgElem& a, const AlgElem& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in algebraic extension");
    if (b.p_.degree() == 0) return a * AlgElem(b.p_.lc().inverse());
    const AlgElem::Modulus& m = b.mod_ ? b.mod_ : a.mod_;
    auto e = extended_gcd(b.p_, *m);
    if (e.g.degree() > 0) throw ZeroDivisor(to_constant_poly(e.g));
    return a * AlgElem(e.s, m);
}

std::vector<std::pair<Poly<GaussRat>, APoly>> split_gcd(const Poly<GaussRat>& m, const APoly& a, const APoly& b) {
    auto attach = [](const APoly& p, const AlgElem::Modulus& mod) {
        std::vector<AlgElem> c;
        for (const auto& x : p.coeffs()) c.emplace_back(x.poly(), mod);
        return APoly(std::move(c));
    };
    std::vector<std::pair<Poly<GaussRat>, APoly>> out;
    std::vector<Poly<GaussRat>> pending{monic(m)};
    while (!pending.empty()) {
        Poly<GaussRat> cur = std::move(pending.back());
        pending.pop_back();
        auto mod = std::make_shared<const TPoly>(lift_constant_poly(cur));
        try {
            out.emplace_back(cur, gcd(attach(a, mod), attach(b, mod)));
        } catch (const ZeroDivisor& z) {
            pending.push_back(monic(exact_quotient(cur, z.factor)));
            pending.push_back(z.factor);
        }
    }
    return out;
}

}  // namespace liouville
