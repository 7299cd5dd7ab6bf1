#include "parhiggs/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parhiggs {

int ParabolicBundle::degree() const {
    int d = std::accumulate(splitting.begin(), splitting.end(), 0);
    for (int t : point_twists) d += t;
    return d;
}

Diagnostics validate(const ParabolicBundle& e) {
    Diagnostics diag;
    auto note = [&diag](const std::string& msg) { diag.violations.push_back(msg); };

    const int n = e.rank();
    const int r = e.curve.count();
    if (n == 0) note("empty splitting");
    for (int i = 0; i + 1 < n; ++i)
        if (e.splitting[static_cast<std::size_t>(i)] < e.splitting[static_cast<std::size_t>(i + 1)])
            note("splitting not non-increasing");

    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < r; ++q)
            if (e.curve.points[static_cast<std::size_t>(p)] == e.curve.points[static_cast<std::size_t>(q)])
                note("marked points not pairwise distinct");

    if (static_cast<int>(e.flags.size()) != r) note("flag count does not match marked points");
    if (static_cast<int>(e.weights.size()) != r) note("weight vector count does not match marked points");
    if (!e.point_twists.empty() && static_cast<int>(e.point_twists.size()) != r)
        note("point twist count does not match marked points");

    for (int p = 0; p < r && p < static_cast<int>(e.flags.size()); ++p) {
        const RatMat& f = e.flags[static_cast<std::size_t>(p)];
        std::ostringstream at;
        at << " at point " << p;
        if (f.rows() != n || f.cols() != n) {
            note("flag matrix has wrong shape" + at.str());
            continue;
        }
        if (f.rank() != n) note("flag not invertible" + at.str());
    }
    for (int p = 0; p < r && p < static_cast<int>(e.weights.size()); ++p) {
        const auto& w = e.weights[static_cast<std::size_t>(p)];
        std::ostringstream at;
        at << " at point " << p;
        if (static_cast<int>(w.size()) != n) {
            note("weight count does not match rank" + at.str());
            continue;
        }
        for (const auto& a : w)
            if (a < Rational(0) || a >= Rational(1)) note("weight outside [0,1)" + at.str());
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!(w[i] < w[i + 1])) note("weights not increasing" + at.str());
    }
    return diag;
}

Rational parabolic_degree(const ParabolicBundle& e) {
    Rational d(e.degree());
    for (const auto& w : e.weights)
        for (const auto& a : w) d += a;
    return d;
}

Rational parabolic_slope(const ParabolicBundle& e) {
    return parabolic_degree(e) / Rational(e.rank());
}

namespace {

std::vector<Rational> flag_coordinates(const ParabolicBundle& e, int p,
                                       const std::vector<Poly>& section) {
    const Rational& pt = e.curve.points[static_cast<std::size_t>(p)];
    std::vector<Rational> v;
    v.reserve(section.size());
    bool all_zero = true;
    for (const auto& s : section) {
        v.push_back(s.eval(pt));
        if (!v.back().is_zero()) all_zero = false;
    }
    if (all_zero)
        throw std::invalid_argument("section vanishes at a marked point (not saturated)");
    const auto inv = e.flags[static_cast<std::size_t>(p)].inverse();
    if (!inv) throw std::invalid_argument("flag matrix not invertible");
    return inv->apply(v);
}

}  // namespace

std::vector<int> subbundle_incidence(const ParabolicBundle& e, const std::vector<Poly>& section) {
    std::vector<int> incidence;
    for (int p = 0; p < e.curve.count(); ++p) {
        const auto c = flag_coordinates(e, p, section);
        int leading_zeros = 0;
        while (leading_zeros < e.rank() && c[static_cast<std::size_t>(leading_zeros)].is_zero())
            ++leading_zeros;
        incidence.push_back(leading_zeros + 1);  // deepest step containing the line
    }
    return incidence;
}

std::vector<Rational> induced_subbundle_weights(const ParabolicBundle& e,
                                                const std::vector<Poly>& section) {
    const auto incidence = subbundle_incidence(e, section);
    std::vector<Rational> out;
    out.reserve(incidence.size());
    for (std::size_t p = 0; p < incidence.size(); ++p)
        out.push_back(e.weights[p][static_cast<std::size_t>(incidence[p] - 1)]);
    return out;
}

EndoCoeffSystem::EndoCoeffSystem(const ParabolicBundle& e, int twist)
    : e_(e), twist_(twist), n_(e.rank()) {
    caps_.resize(static_cast<std::size_t>(n_) * n_);
    var_offset_.assign(static_cast<std::size_t>(n_) * n_, -1);
    var_count_ = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const int cap = e.splitting[static_cast<std::size_t>(i)] -
                            e.splitting[static_cast<std::size_t>(j)] + twist;
            caps_[static_cast<std::size_t>(i) * n_ + j] = cap;
            if (cap >= 0) {
                var_offset_[static_cast<std::size_t>(i) * n_ + j] = var_count_;
                var_count_ += cap + 1;
            }
        }
    }
}

int EndoCoeffSystem::var_index(int i, int j, int m) const {
    const int off = var_offset_[static_cast<std::size_t>(i) * n_ + j];
    if (off < 0 || m > caps_[static_cast<std::size_t>(i) * n_ + j]) return -1;
    return off + m;
}

void EndoCoeffSystem::add_flag_conditions(SectionMode mode) {
    for (int p = 0; p < e_.curve.count(); ++p) {
        const RatMat& f = e_.flags[static_cast<std::size_t>(p)];
        const auto inv_opt = f.inverse();
        if (!inv_opt) throw std::invalid_argument("flag matrix not invertible");
        const RatMat& finv = *inv_opt;
        const Rational& pt = e_.curve.points[static_cast<std::size_t>(p)];

        int max_cap = 0;
        for (int c : caps_) max_cap = std::max(max_cap, c);
        std::vector<Rational> pw(static_cast<std::size_t>(max_cap) + 1, Rational(1));
        for (std::size_t m = 1; m < pw.size(); ++m) pw[m] = pw[m - 1] * pt;

        for (int a = 0; a < n_; ++a) {
            const int b_lo = (mode == SectionMode::Parabolic) ? a + 1 : a;
            for (int b = b_lo; b < n_; ++b) {
                std::vector<Rational> row(static_cast<std::size_t>(var_count_), Rational(0));
                bool nontrivial = false;
                for (int i = 0; i < n_; ++i) {
                    if (finv.at(a, i).is_zero()) continue;
                    for (int j = 0; j < n_; ++j) {
                        if (f.at(j, b).is_zero()) continue;
                        const Rational factor = finv.at(a, i) * f.at(j, b);
                        const int cap = caps_[static_cast<std::size_t>(i) * n_ + j];
                        for (int m = 0; m <= cap; ++m) {
                            const int v = var_index(i, j, m);
                            if (v < 0) continue;
                            row[static_cast<std::size_t>(v)] += factor * pw[static_cast<std::size_t>(m)];
                            nontrivial = true;
                        }
                    }
                }
                if (nontrivial) rows_.push_back(std::move(row));
            }
        }
    }
}

void EndoCoeffSystem::add_pairing_conditions(const PolyMat& omega) {
    if (omega.rows() != n_ || omega.cols() != n_)
        throw std::invalid_argument("pairing matrix shape does not match bundle rank");
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            int bound = -1;
            for (int k = 0; k < n_; ++k) {
                const int cap_ka = caps_[static_cast<std::size_t>(k) * n_ + a];
                const int cap_kb = caps_[static_cast<std::size_t>(k) * n_ + b];
                if (cap_ka >= 0 && !omega.at(k, b).is_zero())
                    bound = std::max(bound, cap_ka + omega.at(k, b).degree());
                if (cap_kb >= 0 && !omega.at(a, k).is_zero())
                    bound = std::max(bound, cap_kb + omega.at(a, k).degree());
            }
            for (int m = 0; m <= bound; ++m) {
                std::vector<Rational> row(static_cast<std::size_t>(var_count_), Rational(0));
                bool nontrivial = false;
                for (int k = 0; k < n_; ++k) {
                    // (Phi^T Omega)_{ab} = sum_k Phi_{ka} Omega_{kb}
                    const Poly& okb = omega.at(k, b);
                    const int cap_ka = caps_[static_cast<std::size_t>(k) * n_ + a];
                    for (int m1 = 0; m1 <= cap_ka; ++m1) {
                        const Rational c = okb.coeff(m - m1);
                        if (c.is_zero()) continue;
                        const int v = var_index(k, a, m1);
                        if (v < 0) continue;
                        row[static_cast<std::size_t>(v)] += c;
                        nontrivial = true;
                    }
                    // (Omega Phi)_{ab} = sum_k Omega_{ak} Phi_{kb}
                    const Poly& oak = omega.at(a, k);
                    const int cap_kb = caps_[static_cast<std::size_t>(k) * n_ + b];
                    for (int m1 = 0; m1 <= cap_kb; ++m1) {
                        const Rational c = oak.coeff(m - m1);
                        if (c.is_zero()) continue;
                        const int v = var_index(k, b, m1);
                        if (v < 0) continue;
                        row[static_cast<std::size_t>(v)] += c;
                        nontrivial = true;
                    }
                }
                if (nontrivial) rows_.push_back(std::move(row));
            }
        }
    }
}

PolyMat EndoCoeffSystem::realize(const std::vector<Rational>& coeffs) const {
    PolyMat m(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const int cap = caps_[static_cast<std::size_t>(i) * n_ + j];
            if (cap < 0) continue;
            std::vector<Rational> c(static_cast<std::size_t>(cap) + 1, Rational(0));
            for (int d = 0; d <= cap; ++d)
                c[static_cast<std::size_t>(d)] = coeffs[static_cast<std::size_t>(var_index(i, j, d))];
            m.at(i, j) = Poly(std::move(c));
        }
    }
    m.set_caps(caps_);
    return m;
}

SectionSpace EndoCoeffSystem::solve(SectionMode mode) const {
    SectionSpace space;
    space.mode = mode;
    space.twist = twist_;
    if (var_count_ == 0) return space;
    RatMat sys(std::max<int>(1, static_cast<int>(rows_.size())), var_count_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int c = 0; c < var_count_; ++c) sys.at(static_cast<int>(r), c) = rows_[r][static_cast<std::size_t>(c)];
    for (auto& v : kernel_basis(sys)) {
        // Rescale to a primitive integer vector (positive leading entry):
        // keeps downstream arithmetic small without losing determinism.
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& x : v) {
            mpz_class t;
            mpz_lcm(t.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
            den_lcm = t;
        }
        for (auto& x : v) x *= Rational(den_lcm);
        for (const auto& x : v) {
            mpz_class t;
            mpz_gcd(t.get_mpz_t(), num_gcd.get_mpz_t(), x.num().get_mpz_t());
            num_gcd = t;
        }
        if (num_gcd > 1) {
            const Rational inv_gcd = Rational(num_gcd).inverse();
            for (auto& x : v) x *= inv_gcd;
        }
        space.basis.push_back(realize(v));
    }
    return space;
}

SectionSpace hom_section_space(const ParabolicBundle& e, int twist, SectionMode mode) {
    EndoCoeffSystem sys(e, twist);
    sys.add_flag_conditions(mode);
    return sys.solve(mode);
}

ParabolicBundle dual_structure(const ParabolicBundle& e) {
    const int n = e.rank();
    const int r = e.curve.count();
    ParabolicBundle d;
    d.curve = e.curve;
    d.splitting.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) d.splitting.push_back(-e.splitting[static_cast<std::size_t>(i)]);
    d.point_twists.assign(static_cast<std::size_t>(r), 0);
    for (int p = 0; p < r; ++p) {
        const auto& w = e.weights[static_cast<std::size_t>(p)];
        int nonzero = 0;
        std::vector<Rational> dual_w;
        for (const auto& a : w)
            if (!a.is_zero()) ++nonzero;
        if (nonzero < n) dual_w.push_back(Rational(0));
        for (int i = n - 1; i >= 0; --i) {
            const auto& a = w[static_cast<std::size_t>(i)];
            if (!a.is_zero()) dual_w.push_back(Rational(1) - a);
        }
        d.weights.push_back(std::move(dual_w));
        d.point_twists[static_cast<std::size_t>(p)] = -e.twist_at(p) - nonzero;

        const auto inv = e.flags[static_cast<std::size_t>(p)].inverse();
        if (!inv) throw std::invalid_argument("flag matrix not invertible");
        RatMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = inv->at(n - 1 - j, i);
        d.flags.push_back(std::move(g));
    }
    return d;
}

ParabolicBundle tensor_structure(const ParabolicBundle& e, const ParabolicBundle& f) {
    if (e.curve.points != f.curve.points)
        throw std::invalid_argument("tensor_structure: bundles live on different marked curves");
    const int n = e.rank(), m = f.rank();
    const int r = e.curve.count();

    // Global frame order: pairs (i,j) by degree sum descending, lex tiebreak.
    std::vector<std::pair<int, int>> frame;
    frame.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) frame.emplace_back(i, j);
    std::stable_sort(frame.begin(), frame.end(), [&](const auto& a, const auto& b) {
        const int da = e.splitting[static_cast<std::size_t>(a.first)] + f.splitting[static_cast<std::size_t>(a.second)];
        const int db = e.splitting[static_cast<std::size_t>(b.first)] + f.splitting[static_cast<std::size_t>(b.second)];
        return da > db;
    });

    ParabolicBundle t;
    t.curve = e.curve;
    t.splitting.reserve(frame.size());
    for (const auto& [i, j] : frame)
        t.splitting.push_back(e.splitting[static_cast<std::size_t>(i)] + f.splitting[static_cast<std::size_t>(j)]);
    t.point_twists.assign(static_cast<std::size_t>(r), 0);

    for (int p = 0; p < r; ++p) {
        const auto& we = e.weights[static_cast<std::size_t>(p)];
        const auto& wf = f.weights[static_cast<std::size_t>(p)];
        struct Piece {
            Rational weight;
            int u, v;
            bool carried;
        };
        std::vector<Piece> pieces;
        int carries = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < m; ++v) {
                Rational w = we[static_cast<std::size_t>(u)] + wf[static_cast<std::size_t>(v)];
                bool carried = false;
                if (w >= Rational(1)) {
                    w -= Rational(1);
                    carried = true;
                    ++carries;
                }
                pieces.push_back({w, u, v, carried});
            }
        }
        std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            if (a.weight != b.weight) return a.weight < b.weight;
            if (a.u != b.u) return a.u < b.u;
            return a.v < b.v;
        });

        const RatMat& fe = e.flags[static_cast<std::size_t>(p)];
        const RatMat& ff = f.flags[static_cast<std::size_t>(p)];
        RatMat g(n * m, n * m);
        std::vector<Rational> w_list;
        for (std::size_t col = 0; col < pieces.size(); ++col) {
            const auto& piece = pieces[col];
            w_list.push_back(piece.weight);
            for (std::size_t row = 0; row < frame.size(); ++row) {
                const auto& [i, j] = frame[row];
                g.at(static_cast<int>(row), static_cast<int>(col)) =
                    fe.at(i, piece.u) * ff.at(j, piece.v);
            }
        }
        t.flags.push_back(std::move(g));
        t.weights.push_back(std::move(w_list));
        t.point_twists[static_cast<std::size_t>(p)] =
            m * e.twist_at(p) + n * f.twist_at(p) + carries;
    }
    return t;
}

}  // namespace parhiggs
