#pragma once

#include "framecalc/expr.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace framecalc {

/// Dense array of frame components of a tensor field of valence
/// (contravariant p, covariant q). Every axis has length dim; indices are
/// 0-based frame indices. For the curvature tensor the layout is
/// at(i,j,k,l) = coefficient of E_l in R(E_i,E_j)E_k.
class TensorField {
public:
    TensorField() = default;
    TensorField(int dim, int contravariant, int covariant);

    int dim() const { return dim_; }
    int contravariant_rank() const { return p_; }
    int covariant_rank() const { return q_; }
    int rank() const { return p_ + q_; }

    Expr& at(std::initializer_list<int> idx);
    const Expr& at(std::initializer_list<int> idx) const;

    bool is_zero() const;

    const std::vector<Expr>& components() const { return comps_; }

    friend bool operator==(const TensorField& a, const TensorField& b) {
        return a.dim_ == b.dim_ && a.p_ == b.p_ && a.q_ == b.q_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const TensorField& a, const TensorField& b) { return !(a == b); }

    friend TensorField operator+(const TensorField& a, const TensorField& b);
    friend TensorField operator-(const TensorField& a, const TensorField& b);
    friend TensorField operator*(const Expr& s, const TensorField& t);

    static TensorField vector(std::vector<Expr> comps);  // valence (1,0)
    static TensorField oneform(std::vector<Expr> comps); // valence (0,1)
    static TensorField bilinear(int dim);                // valence (0,2)

private:
    std::size_t offset(std::initializer_list<int> idx) const;

    int dim_ = 0, p_ = 0, q_ = 0;
    std::vector<Expr> comps_;
};

/// Renders a vector field as a combination of basis vectors, e.g. "-e5" or
/// "x1*exp(x5)*e1 + e5".
std::string vector_to_string(const TensorField& v, const std::string& basis_prefix = "e");

} // namespace framecalc
