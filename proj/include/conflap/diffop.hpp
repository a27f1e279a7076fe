#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conflap/fn_elem.hpp"

namespace conflap {

// Multi-index of a mixed partial; length equals the variable count.
using MultiIndex = std::vector<unsigned>;

// Monomial budget for operator coefficients; compositions that exceed it
// throw TermCapError instead of thrashing. Default 200000.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

// Linear differential operator in canonical form: all multiplication
// coefficients to the left of all derivatives, sum of a_alpha * d^alpha with
// exact FnElem coefficients. Composition is the only operation that has to
// reckon with noncommutativity; everything downstream is componentwise.
class DiffOp {
public:
    explicit DiffOp(int var_count) : var_count_(var_count) {}
    static DiffOp zero(int var_count) { return DiffOp(var_count); }
    static DiffOp identity(int var_count);
    static DiffOp partial(int var_count, int var, unsigned order = 1);
    static DiffOp multiplication(FnElem f);  // order-0 operator
    static DiffOp term(FnElem coeff, MultiIndex idx);

    // generators of the flat-side calculus
    static DiffOp laplacian(int n);                  // sum of d_i^2
    static DiffOp euler(int n);                      // sum of y_i d_i
    static DiffOp m_weight(int n, long w);           // mult by 2^w (1+|y|^2)^(-w)
    static DiffOp radial_sq(int n);                  // mult by |y|^2

    int var_count() const { return var_count_; }
    const std::map<MultiIndex, FnElem, TermLess>& terms() const { return terms_; }
    bool is_zero() const;
    long order() const;  // max |alpha|, -1 for zero
    // total monomials across all coefficients; the term-cap metric
    std::size_t monomial_count() const;

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& p, const DiffOp& q);
    friend DiffOp operator-(const DiffOp& p, const DiffOp& q);
    friend DiffOp operator*(const Rational& c, const DiffOp& p);

    FnElem apply(const FnElem& f) const;
    DiffOp pow(unsigned k) const;  // repeated composition

    // lowest-order nonzero term, the failure witness
    std::optional<std::pair<MultiIndex, FnElem>> first_term() const;
    std::string str(char letter = 'y') const;

    void add_term(const MultiIndex& idx, const FnElem& coeff);

private:
    int var_count_;
    std::map<MultiIndex, FnElem, TermLess> terms_;
};

// Canonical form of p after q, by the generalized Leibniz rule.
DiffOp compose(const DiffOp& p, const DiffOp& q);
// compose(p, q) - compose(q, p)
DiffOp commutator(const DiffOp& p, const DiffOp& q);
DiffOp linear_combine(const std::vector<Rational>& coeffs, const std::vector<DiffOp>& ops);
// Componentwise coefficient equality after key union.
bool equal(const DiffOp& p, const DiffOp& q);

std::ostream& operator<<(std::ostream& os, const DiffOp& p);

}  // namespace conflap
