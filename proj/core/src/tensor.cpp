#include "framecalc/tensor.hpp"

#include "framecalc/errors.hpp"

#include <cstddef>

namespace framecalc {

TensorField::TensorField(int dim, int contravariant, int covariant)
    : dim_(dim), p_(contravariant), q_(covariant) {
    std::size_t size = 1;
    for (int r = 0; r < rank(); ++r) size *= static_cast<std::size_t>(dim_);
    comps_.assign(size, Expr());
}

std::size_t TensorField::offset(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw Error("tensor index arity mismatch");
    std::size_t off = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) throw Error("tensor index out of range");
        off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return off;
}

Expr& TensorField::at(std::initializer_list<int> idx) { return comps_[offset(idx)]; }
const Expr& TensorField::at(std::initializer_list<int> idx) const { return comps_[offset(idx)]; }

bool TensorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

TensorField operator+(const TensorField& a, const TensorField& b) {
    if (a.dim_ != b.dim_ || a.p_ != b.p_ || a.q_ != b.q_) throw Error("tensor valence mismatch");
    TensorField out = a;
    for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] += b.comps_[i];
    return out;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
    if (a.dim_ != b.dim_ || a.p_ != b.p_ || a.q_ != b.q_) throw Error("tensor valence mismatch");
    TensorField out = a;
    for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] -= b.comps_[i];
    return out;
}

TensorField operator*(const Expr& s, const TensorField& t) {
    TensorField out = t;
    for (auto& c : out.comps_) c = s * c;
    return out;
}

TensorField TensorField::vector(std::vector<Expr> comps) {
    TensorField out(static_cast<int>(comps.size()), 1, 0);
    out.comps_ = std::move(comps);
    return out;
}

TensorField TensorField::oneform(std::vector<Expr> comps) {
    TensorField out(static_cast<int>(comps.size()), 0, 1);
    out.comps_ = std::move(comps);
    return out;
}

TensorField TensorField::bilinear(int dim) { return TensorField(dim, 0, 2); }

std::string vector_to_string(const TensorField& v, const std::string& basis_prefix) {
    if (v.rank() != 1) throw Error("vector_to_string expects a rank-1 field");
    std::string out;
    for (int k = 0; k < v.dim(); ++k) {
        const Expr& s = v.at({k});
        if (s.is_zero()) continue;
        const std::string name = basis_prefix + std::to_string(k + 1);
        std::string piece;
        if (s.is_one()) {
            piece = name;
        } else if ((-s).is_one()) {
            piece = "-" + name;
        } else if (s.terms().size() == 1) {
            piece = to_string(s) + "*" + name;
        } else {
            piece = "(" + to_string(s) + ")*" + name;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace framecalc
