#pragma once

#include "framecalc/expr.hpp"
#include "framecalc/tensor.hpp"

#include <optional>
#include <vector>

namespace framecalc {

/// Structure functions of a moving frame: [E_i, E_j] = sum_k at(i,j,k) E_k.
struct StructureFunctions {
    explicit StructureFunctions(int dim)
        : dim(dim), c(static_cast<std::size_t>(dim) * dim * dim) {}

    Expr& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
    const Expr& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    int dim;
    std::vector<Expr> c;
};

/// Levi-Civita connection coefficients: nabla_{E_i} E_j = sum_k at(i,j,k) E_k.
struct Connection {
    explicit Connection(int dim)
        : dim(dim), gamma(static_cast<std::size_t>(dim) * dim * dim) {}

    Expr& at(int i, int j, int k) {
        return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Expr& at(int i, int j, int k) const {
        return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    int dim;
    std::vector<Expr> gamma;
};

/// A manifold presented by a moving frame over a coordinate chart: row i of
/// the frame matrix gives E_i = sum_a frame[i][a] d/dx_a, and the frame metric
/// h(E_i, E_j) is a constant symmetric nondegenerate rational matrix (identity
/// by default). An abstract presentation (structure functions given directly,
/// no chart) is also supported; its data must then be coordinate-free and is
/// validated against the Jacobi identity at construction.
class FrameManifold {
public:
    using ExprMatrix = std::vector<std::vector<Expr>>;
    using RationalMatrix = std::vector<std::vector<Rational>>;

    static FrameManifold from_chart(std::vector<Symbol> chart, ExprMatrix frame,
                                    std::optional<RationalMatrix> metric = std::nullopt,
                                    std::optional<ExprMatrix> inverse_frame = std::nullopt);

    static FrameManifold from_structure_functions(StructureFunctions c,
                                                  std::optional<RationalMatrix> metric =
                                                      std::nullopt);

    int dim() const { return dim_; }
    bool has_chart() const { return !chart_.empty(); }
    const std::vector<Symbol>& chart() const { return chart_; }
    const ExprMatrix& frame() const { return frame_; }
    const ExprMatrix& inverse_frame() const { return inverse_frame_; }
    const RationalMatrix& metric() const { return metric_; }
    const RationalMatrix& inverse_metric() const { return inverse_metric_; }
    bool metric_is_identity() const;

    /// Directional derivative E_i(f) through the chart (zero in abstract mode,
    /// where all data is constant).
    Expr frame_derivative(int i, const Expr& f) const;

    /// h(X, Y) for two vector fields in frame components.
    Expr metric_pair(const TensorField& x, const TensorField& y) const;

    const std::optional<StructureFunctions>& supplied_structure() const { return abstract_c_; }

private:
    FrameManifold() = default;

    int dim_ = 0;
    std::vector<Symbol> chart_;
    ExprMatrix frame_, inverse_frame_;
    RationalMatrix metric_, inverse_metric_;
    std::optional<StructureFunctions> abstract_c_;
};

/// Structure functions derived from the chart-level bracket, re-expanded in
/// the frame basis (or the supplied ones in abstract mode).
StructureFunctions structure_functions(const FrameManifold& m);

/// Jacobi identity residual of structure functions; zero for genuine frames.
bool jacobi_identity_holds(const FrameManifold& m, const StructureFunctions& c);

/// Levi-Civita connection from the Koszul formula. With a constant frame
/// metric the three derivative terms drop and
/// 2 h(nabla_{E_i} E_j, E_k) = -h(E_i,[E_j,E_k]) - h(E_j,[E_i,E_k]) + h(E_k,[E_i,E_j]).
Connection koszul_connection(const FrameManifold& m, const StructureFunctions& c);

/// Curvature R(E_i,E_j)E_k = nabla_i nabla_j E_k - nabla_j nabla_i E_k
/// - nabla_{[E_i,E_j]} E_k, returned as a (1,3) tensor with at(i,j,k,l) the
/// E_l-component.
TensorField riemann(const FrameManifold& m, const Connection& conn, const StructureFunctions& c);

/// Ricci tensor Ric(X, Y) = trace of Z -> R(Z, X)Y; on orthonormal frames this
/// is sum_i eps_i h(R(E_i, X)Y, E_i).
TensorField ricci(const FrameManifold& m, const TensorField& riem);

/// Scalar curvature: metric trace of the Ricci tensor.
Expr scalar_curvature(const FrameManifold& m, const TensorField& ric);

/// Frame components of nabla_{E_i} V as a matrix D with D.at(i,k) = (nabla_{E_i}V)^k,
/// stored as a (1,1) tensor.
TensorField covariant_derivative(const FrameManifold& m, const Connection& conn,
                                 const TensorField& v);

/// (L_V h)(E_i,E_j) = h(nabla_{E_i}V, E_j) + h(E_i, nabla_{E_j}V).
TensorField lie_derivative_metric(const FrameManifold& m, const Connection& conn,
                                  const TensorField& v);

/// Connection-free route to the same tensor through the bracket definition:
/// (L_V h)(E_i,E_j) = -h([V,E_i],E_j) - h(E_i,[V,E_j]) for a constant metric.
TensorField lie_derivative_metric_bracket(const FrameManifold& m, const StructureFunctions& c,
                                          const TensorField& v);

Expr divergence(const FrameManifold& m, const Connection& conn, const TensorField& v);
TensorField gradient(const FrameManifold& m, const Expr& f);
Expr laplacian(const FrameManifold& m, const Connection& conn, const Expr& f);

/// Lowers the last index: out(i,j,k,l) = h(R(E_i,E_j)E_k, E_l).
TensorField lower_riemann(const FrameManifold& m, const TensorField& riem);

/// Metric trace of a (0,2) tensor: sum_{ij} h^{ij} t(i,j).
Expr metric_trace(const FrameManifold& m, const TensorField& t);

} // namespace framecalc
