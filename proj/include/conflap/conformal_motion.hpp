#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conflap/fn_elem.hpp"

namespace conflap {

// Value c * prod_i P_i^{e_i} with monic polynomial factors and a rational
// scalar, the shape conformal factors keep under pullbacks. Keeping the
// factorization explicit is what makes half powers (radical weights)
// computable without polynomial factorization.
class FactoredRational {
public:
    explicit FactoredRational(int var_count, Rational scalar = Rational(1))
        : var_count_(var_count), scalar_(std::move(scalar)) {}

    int var_count() const { return var_count_; }
    const Rational& scalar() const { return scalar_; }
    const std::vector<std::pair<Polynomial, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty() && scalar_.is_one(); }

    // Multiplies in p^exponent; p is made monic (its leading coefficient moves
    // into the scalar) and constant or repeated factors are merged.
    void multiply_factor(Polynomial p, int exponent);
    void multiply_scalar(const Rational& c);
    FactoredRational times(const FactoredRational& o) const;

    RationalFunction to_rational() const;

    // Base polynomial used by odd half powers: squarefree scalar part times
    // the product of odd-exponent factors. Constant 1 when the value is a
    // perfect square (then no radical is needed).
    Polynomial radical_base() const;
    // The same base kept in factored form, so it can be pulled back exactly.
    FactoredRational radical_base_factored() const;

    // this^(twice_w / 2). Even twice_w gives a rational element; odd twice_w
    // gives outside * s with s^2 = radical_base() (or stays rational when the
    // base degenerates to 1).
    FnElem half_power(long twice_w) const;

private:
    int var_count_;
    Rational scalar_;
    std::vector<std::pair<Polynomial, int>> factors_;  // sorted by Polynomial::compare
};

// A conformal transformation of R^n built from the four generators, or a
// composition of them. Carries the exact coordinate map and the conformal
// factor Omega (with C* g_E = Omega^2 g_E) in factored form.
class ConformalMotion {
public:
    static ConformalMotion translation(int n, std::vector<Rational> v);
    static ConformalMotion rotation(int n, std::vector<std::vector<Rational>> matrix);
    // the exact 3-4-5 rotation in the (y1, y2) plane
    static ConformalMotion rotation34(int n);
    static ConformalMotion dilation(int n, Rational lambda);
    static ConformalMotion inversion(int n);
    // apply `first`, then `second`
    static ConformalMotion compose(const ConformalMotion& first,
                                   const ConformalMotion& second);
    // by name: "translation" | "rotation" | "dilation" | "inversion"
    static ConformalMotion by_name(const std::string& name, int n);
    // comma-separated pipeline, applied left to right
    static ConformalMotion parse_pipeline(const std::string& spec, int n);

    int n() const { return n_; }
    const std::string& name() const { return name_; }
    // coordinate functions C_1(y), ..., C_n(y)
    const std::vector<RationalFunction>& coordinate_map() const { return map_; }
    ConformalMotion inverse() const;
    const FactoredRational& omega() const { return omega_; }

    // f(C(y)) for polynomial or rational f.
    FnElem pullback(const FnElem& f) const;
    // Pullback of a radical element whose base equals
    // base_factored.radical_base(); the result may land in a different
    // radical base (or none).
    FnElem pullback_radical(const RadicalElement& x,
                            const FactoredRational& base_factored) const;
    // F(C(y)) keeping the factored form; closed for all generator kinds.
    FactoredRational pull_factored(const FactoredRational& f) const;

    // Exact check of the defining invariant J^T J = Omega^2 I.
    bool jacobian_is_conformal() const;

private:
    enum class Kind { translation, rotation, dilation, inversion, composite };

    explicit ConformalMotion(int n) : n_(n), omega_(n) {}

    Kind kind_ = Kind::translation;
    int n_ = 0;
    std::string name_;
    std::vector<RationalFunction> map_;
    FactoredRational omega_;
    std::shared_ptr<const ConformalMotion> first_, second_;  // composites only
    std::vector<std::vector<Rational>> matrix_;              // rotation
    std::vector<Rational> shift_;                            // translation
    Rational lambda_ = Rational(1);                          // dilation

    // p(C(y)) for the affine generator kinds (translation/rotation/dilation).
    Polynomial pull_poly_affine(const Polynomial& p) const;
    // Kind-dispatched pullback of a rational element: affine kinds substitute
    // directly, inversion homogenizes (P -> P~ / |y|^(2 deg P)), composites
    // chain the two. Much cheaper than substituting the composed rational map.
    FnElem pull_rational(const FnElem& f) const;
};

}  // namespace conflap
