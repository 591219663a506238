#include "framecalc/frame_manifold.hpp"

#include "framecalc/errors.hpp"

namespace framecalc {

namespace {

using ExprMatrix = FrameManifold::ExprMatrix;
using RationalMatrix = FrameManifold::RationalMatrix;

RationalMatrix identity_metric(int dim) {
    RationalMatrix m(dim, std::vector<Rational>(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix invert_rational_matrix(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    RationalMatrix a = m;
    RationalMatrix inv = identity_metric(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("frame metric is degenerate");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational p = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

// Gauss-Jordan over expressions, restricted to single-term pivots. Division
// failures mean the inverse does not exist inside the algebra.
ExprMatrix invert_frame_matrix(const ExprMatrix& f) {
    const int n = static_cast<int>(f.size());
    ExprMatrix a = f;
    ExprMatrix inv(n, std::vector<Expr>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = Expr::from_int(1);
    try {
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (a[r][col].terms().size() == 1) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                throw NonInvertibleFrameError(
                    "frame elimination requires a non-term pivot in column " +
                    std::to_string(col + 1) + " and no inverse frame was supplied");
            std::swap(a[col], a[pivot]);
            std::swap(inv[col], inv[pivot]);
            const Term p = a[col][col].terms()[0];
            for (int c = 0; c < n; ++c) {
                a[col][c] = divide_by_term(a[col][c], p);
                inv[col][c] = divide_by_term(inv[col][c], p);
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                const Expr factor = a[r][col];
                for (int c = 0; c < n; ++c) {
                    a[r][c] -= factor * a[col][c];
                    inv[r][c] -= factor * inv[col][c];
                }
            }
        }
    } catch (const NonDivisibleError& e) {
        throw NonInvertibleFrameError(std::string("frame is not invertible by single-term "
                                                  "elimination: ") +
                                      e.what());
    }
    return inv;
}

void require_symmetric(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw Error("metric matrix is not square");
        for (int j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) throw Error("frame metric is not symmetric");
    }
}

} // namespace

FrameManifold FrameManifold::from_chart(std::vector<Symbol> chart, ExprMatrix frame,
                                        std::optional<RationalMatrix> metric,
                                        std::optional<ExprMatrix> inverse_frame) {
    FrameManifold m;
    m.dim_ = static_cast<int>(chart.size());
    if (m.dim_ == 0) throw Error("manifold dimension must be positive");
    if (static_cast<int>(frame.size()) != m.dim_) throw Error("frame row count != dimension");
    for (const auto& row : frame)
        if (static_cast<int>(row.size()) != m.dim_) throw Error("frame column count != dimension");
    for (const auto& sym : chart)
        if (!sym.is_coordinate()) throw Error("chart symbols must be coordinates");

    m.chart_ = std::move(chart);
    m.frame_ = std::move(frame);
    m.metric_ = metric ? std::move(*metric) : identity_metric(m.dim_);
    require_symmetric(m.metric_);
    m.inverse_metric_ = invert_rational_matrix(m.metric_);

    if (inverse_frame) {
        m.inverse_frame_ = std::move(*inverse_frame);
        // F * G must be the identity, exactly.
        for (int i = 0; i < m.dim_; ++i)
            for (int j = 0; j < m.dim_; ++j) {
                Expr sum;
                for (int a = 0; a < m.dim_; ++a) sum += m.frame_[i][a] * m.inverse_frame_[a][j];
                const Expr expected = i == j ? Expr::from_int(1) : Expr();
                if (sum != expected)
                    throw NonInvertibleFrameError("supplied inverse frame does not invert the frame");
            }
    } else {
        m.inverse_frame_ = invert_frame_matrix(m.frame_);
    }
    return m;
}

FrameManifold FrameManifold::from_structure_functions(StructureFunctions c,
                                                      std::optional<RationalMatrix> metric) {
    FrameManifold m;
    m.dim_ = c.dim;
    if (m.dim_ == 0) throw Error("manifold dimension must be positive");
    for (const auto& e : c.c)
        if (!e.is_constant())
            throw Error("abstract structure functions must be coordinate-free");
    for (int i = 0; i < m.dim_; ++i)
        for (int j = 0; j < m.dim_; ++j)
            for (int k = 0; k < m.dim_; ++k)
                if (c.at(i, j, k) != -c.at(j, i, k))
                    throw Error("structure functions must be antisymmetric in the first two slots");
    m.metric_ = metric ? std::move(*metric) : identity_metric(m.dim_);
    require_symmetric(m.metric_);
    m.inverse_metric_ = invert_rational_matrix(m.metric_);
    m.abstract_c_ = std::move(c);
    if (!jacobi_identity_holds(m, *m.abstract_c_))
        throw Error("supplied structure functions violate the Jacobi identity");
    return m;
}

bool FrameManifold::metric_is_identity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (metric_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Expr FrameManifold::frame_derivative(int i, const Expr& f) const {
    if (!has_chart()) return Expr(); // abstract data is constant
    Expr out;
    for (int a = 0; a < dim_; ++a) {
        if (frame_[i][a].is_zero()) continue;
        out += frame_[i][a] * partial(f, chart_[a]);
    }
    return out;
}

Expr FrameManifold::metric_pair(const TensorField& x, const TensorField& y) const {
    Expr out;
    for (int i = 0; i < dim_; ++i) {
        if (x.at({i}).is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (metric_[i][j] == 0 || y.at({j}).is_zero()) continue;
            out += x.at({i}) * y.at({j}) * Expr::from_rational(metric_[i][j]);
        }
    }
    return out;
}

StructureFunctions structure_functions(const FrameManifold& m) {
    if (m.supplied_structure()) return *m.supplied_structure();
    const int n = m.dim();
    StructureFunctions c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Chart components of [E_i, E_j].
            std::vector<Expr> w(n);
            for (int a = 0; a < n; ++a)
                w[a] = m.frame_derivative(i, m.frame()[j][a]) -
                       m.frame_derivative(j, m.frame()[i][a]);
            // Re-expand in the frame basis through the inverse frame.
            for (int k = 0; k < n; ++k) {
                Expr ck;
                for (int a = 0; a < n; ++a) {
                    if (w[a].is_zero()) continue;
                    ck += w[a] * m.inverse_frame()[a][k];
                }
                c.at(i, j, k) = ck;
                c.at(j, i, k) = -ck;
            }
        }
    return c;
}

bool jacobi_identity_holds(const FrameManifold& m, const StructureFunctions& c) {
    const int n = m.dim();
    auto bracket_component = [&](int i, int j, int k, int l) {
        // E_l component of [[E_i,E_j],E_k].
        Expr out = -m.frame_derivative(k, c.at(i, j, l));
        for (int mm = 0; mm < n; ++mm) {
            if (c.at(i, j, mm).is_zero()) continue;
            out += c.at(i, j, mm) * c.at(mm, k, l);
        }
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Expr res = bracket_component(i, j, k, l) + bracket_component(j, k, i, l) +
                               bracket_component(k, i, j, l);
                    if (!res.is_zero()) return false;
                }
    return true;
}

Connection koszul_connection(const FrameManifold& m, const StructureFunctions& c) {
    const int n = m.dim();
    const auto& h = m.metric();
    const auto& hinv = m.inverse_metric();
    Connection conn(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // K_k = h(nabla_{E_i} E_j, E_k)
            std::vector<Expr> kvec(n);
            for (int k = 0; k < n; ++k) {
                Expr acc;
                for (int mm = 0; mm < n; ++mm) {
                    if (h[mm][i] != 0 && !c.at(j, k, mm).is_zero())
                        acc -= c.at(j, k, mm) * Expr::from_rational(h[mm][i]);
                    if (h[mm][j] != 0 && !c.at(i, k, mm).is_zero())
                        acc -= c.at(i, k, mm) * Expr::from_rational(h[mm][j]);
                    if (h[mm][k] != 0 && !c.at(i, j, mm).is_zero())
                        acc += c.at(i, j, mm) * Expr::from_rational(h[mm][k]);
                }
                kvec[k] = divide_by_term(acc, Term(rat(2)));
            }
            for (int l = 0; l < n; ++l) {
                Expr g;
                for (int k = 0; k < n; ++k) {
                    if (hinv[k][l] == 0 || kvec[k].is_zero()) continue;
                    g += kvec[k] * Expr::from_rational(hinv[k][l]);
                }
                conn.at(i, j, l) = g;
            }
        }
    return conn;
}

TensorField riemann(const FrameManifold& m, const Connection& conn, const StructureFunctions& c) {
    const int n = m.dim();
    TensorField riem(n, 1, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Expr r = m.frame_derivative(i, conn.at(j, k, l)) -
                             m.frame_derivative(j, conn.at(i, k, l));
                    for (int mm = 0; mm < n; ++mm) {
                        if (!conn.at(j, k, mm).is_zero()) r += conn.at(j, k, mm) * conn.at(i, mm, l);
                        if (!conn.at(i, k, mm).is_zero()) r -= conn.at(i, k, mm) * conn.at(j, mm, l);
                        if (!c.at(i, j, mm).is_zero()) r -= c.at(i, j, mm) * conn.at(mm, k, l);
                    }
                    riem.at({i, j, k, l}) = r;
                }
        }
    return riem;
}

TensorField ricci(const FrameManifold& m, const TensorField& riem) {
    const int n = m.dim();
    TensorField ric(n, 0, 2);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Expr acc;
            for (int i = 0; i < n; ++i) acc += riem.at({i, j, k, i});
            ric.at({j, k}) = acc;
        }
    return ric;
}

Expr scalar_curvature(const FrameManifold& m, const TensorField& ric) {
    return metric_trace(m, ric);
}

TensorField covariant_derivative(const FrameManifold& m, const Connection& conn,
                                 const TensorField& v) {
    const int n = m.dim();
    TensorField d(n, 1, 1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Expr acc = m.frame_derivative(i, v.at({k}));
            for (int j = 0; j < n; ++j) {
                if (v.at({j}).is_zero()) continue;
                acc += v.at({j}) * conn.at(i, j, k);
            }
            d.at({i, k}) = acc;
        }
    return d;
}

TensorField lie_derivative_metric(const FrameManifold& m, const Connection& conn,
                                  const TensorField& v) {
    const int n = m.dim();
    const auto& h = m.metric();
    TensorField d = covariant_derivative(m, conn, v);
    TensorField lie(n, 0, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Expr acc;
            for (int k = 0; k < n; ++k) {
                if (h[k][j] != 0 && !d.at({i, k}).is_zero())
                    acc += d.at({i, k}) * Expr::from_rational(h[k][j]);
                if (h[k][i] != 0 && !d.at({j, k}).is_zero())
                    acc += d.at({j, k}) * Expr::from_rational(h[k][i]);
            }
            lie.at({i, j}) = acc;
        }
    return lie;
}

TensorField lie_derivative_metric_bracket(const FrameManifold& m, const StructureFunctions& c,
                                          const TensorField& v) {
    const int n = m.dim();
    const auto& h = m.metric();
    // [V, E_i]^l = sum_k V^k c(k,i,l) - E_i(V^l)
    auto bracket = [&](int i, int l) {
        Expr out = -m.frame_derivative(i, v.at({l}));
        for (int k = 0; k < n; ++k) {
            if (v.at({k}).is_zero()) continue;
            out += v.at({k}) * c.at(k, i, l);
        }
        return out;
    };
    TensorField lie(n, 0, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Expr acc;
            for (int l = 0; l < n; ++l) {
                Expr bi = bracket(i, l);
                if (!bi.is_zero() && h[l][j] != 0) acc -= bi * Expr::from_rational(h[l][j]);
                Expr bj = bracket(j, l);
                if (!bj.is_zero() && h[l][i] != 0) acc -= bj * Expr::from_rational(h[l][i]);
            }
            lie.at({i, j}) = acc;
        }
    return lie;
}

Expr divergence(const FrameManifold& m, const Connection& conn, const TensorField& v) {
    TensorField d = covariant_derivative(m, conn, v);
    Expr out;
    for (int i = 0; i < m.dim(); ++i) out += d.at({i, i});
    return out;
}

TensorField gradient(const FrameManifold& m, const Expr& f) {
    const int n = m.dim();
    const auto& hinv = m.inverse_metric();
    TensorField g(n, 1, 0);
    for (int i = 0; i < n; ++i) {
        Expr acc;
        for (int j = 0; j < n; ++j) {
            if (hinv[i][j] == 0) continue;
            Expr df = m.frame_derivative(j, f);
            if (!df.is_zero()) acc += df * Expr::from_rational(hinv[i][j]);
        }
        g.at({i}) = acc;
    }
    return g;
}

Expr laplacian(const FrameManifold& m, const Connection& conn, const Expr& f) {
    return divergence(m, conn, gradient(m, f));
}

TensorField lower_riemann(const FrameManifold& m, const TensorField& riem) {
    const int n = m.dim();
    const auto& h = m.metric();
    TensorField low(n, 0, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Expr acc;
                    for (int mm = 0; mm < n; ++mm) {
                        if (h[mm][l] == 0 || riem.at({i, j, k, mm}).is_zero()) continue;
                        acc += riem.at({i, j, k, mm}) * Expr::from_rational(h[mm][l]);
                    }
                    low.at({i, j, k, l}) = acc;
                }
    return low;
}

Expr metric_trace(const FrameManifold& m, const TensorField& t) {
    const int n = m.dim();
    const auto& hinv = m.inverse_metric();
    Expr out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (hinv[i][j] == 0 || t.at({i, j}).is_zero()) continue;
            out += t.at({i, j}) * Expr::from_rational(hinv[i][j]);
        }
    return out;
}

} // namespace framecalc
