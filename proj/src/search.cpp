#include "symsum/search.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace symsum {

thread_local unsigned long long BoxSearch::nodes_visited = 0;

BoxSearch::BoxSearch(LatticePtr lattice, i64 bound)
    : lattice_(std::move(lattice)), bound_(bound) {
    if (bound_ < 1) throw std::invalid_argument("box search bound must be >= 1");
}

void BoxSearch::add(SearchConstraint c) {
    if (!c.linear.empty() && static_cast<int>(c.linear.size()) != lattice_->rank)
        throw std::invalid_argument("constraint '" + c.tag + "': linear part has wrong length");
    constraints_.push_back(std::move(c));
}

namespace {

struct ConstraintState {
    const SearchConstraint* c;
    // linear partial value of fixed prefix
    i64 lin_fixed = 0;
    // for with_square: q_fixed = prefix^T G prefix, and cross[j] = 2 * sum_{i<depth} G_ij x_i
    i64 q_fixed = 0;
};

// min/max of q*x^2 + l*x over integer x in [-b, b]; q, l small.
inline void quad_range(i64 q, i64 l, i64 b, i64& lo, i64& hi) {
    auto val = [&](i64 x) { return checked_add(checked_mul(q, checked_mul(x, x)), checked_mul(l, x)); };
    i64 v1 = val(-b), v2 = val(b);
    lo = std::min(v1, v2);
    hi = std::max(v1, v2);
    if (q != 0) {
        // extremum sits near the vertex -l/(2q); sample its integer neighbors
        i64 xv = -(l / (2 * q));
        for (i64 x = xv - 1; x <= xv + 1; ++x) {
            if (x < -b || x > b) continue;
            i64 v = val(x);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
}

class Runner {
public:
    Runner(const IntersectionLattice& lat, i64 bound,
           const std::vector<SearchConstraint>& cs,
           const std::function<bool(const std::vector<i64>&)>& visitor)
        : lat_(lat), bound_(bound), visitor_(visitor) {
        states_.reserve(cs.size());
        for (const auto& c : cs) states_.push_back(ConstraintState{&c});
        x_.assign(static_cast<size_t>(lat.rank), 0);
        cross_.assign(cs.size(), std::vector<i64>(static_cast<size_t>(lat.rank), 0));
    }

    // Enumerate with first coordinate restricted to [first_lo, first_hi].
    bool run(i64 first_lo, i64 first_hi) {
        first_lo_ = first_lo;
        first_hi_ = first_hi;
        return descend(0);
    }

private:
    bool feasible(int depth) const {
        int rank = lat_.rank;
        for (size_t ci = 0; ci < states_.size(); ++ci) {
            const auto& st = states_[ci];
            const auto& c = *st.c;
            i64 lo = st.lin_fixed, hi = st.lin_fixed;
            if (c.with_square) {
                lo = checked_add(lo, st.q_fixed);
                hi = checked_add(hi, st.q_fixed);
            }
            for (int j = depth; j < rank; ++j) {
                i64 l = 0;
                if (!c.linear.empty()) l = c.linear[static_cast<size_t>(j)];
                i64 q = 0;
                if (c.with_square) {
                    l = checked_add(l, cross_[ci][static_cast<size_t>(j)]);
                    q = lat_.gram[static_cast<size_t>(j)][static_cast<size_t>(j)];
                }
                i64 tlo, thi;
                quad_range(q, l, bound_, tlo, thi);
                lo = checked_add(lo, tlo);
                hi = checked_add(hi, thi);
                if (c.with_square) {
                    // off-diagonal terms among the undetermined coordinates
                    i64 off = 0;
                    const auto& gj = lat_.gram[static_cast<size_t>(j)];
                    for (int k = j + 1; k < rank; ++k) {
                        i64 g = gj[static_cast<size_t>(k)];
                        if (g != 0)
                            off = checked_add(off, checked_mul(2 * (g < 0 ? -g : g),
                                                               checked_mul(bound_, bound_)));
                    }
                    lo = checked_sub(lo, off);
                    hi = checked_add(hi, off);
                }
            }
            if (hi < c.lo || lo > c.hi) return false;
        }
        return true;
    }

    bool leaf_ok() const {
        for (const auto& st : states_) {
            const auto& c = *st.c;
            i64 v = st.lin_fixed;
            if (c.with_square) v = checked_add(v, st.q_fixed);
            if (v < c.lo || v > c.hi) return false;
        }
        return true;
    }

    bool descend(int depth) {
        if (depth == lat_.rank) {
            ++BoxSearch::nodes_visited;
            if (leaf_ok()) return visitor_(x_);
            return true;
        }
        if (!feasible(depth)) return true;
        i64 lo = depth == 0 ? first_lo_ : -bound_;
        i64 hi = depth == 0 ? first_hi_ : bound_;
        for (i64 v = lo; v <= hi; ++v) {
            push(depth, v);
            bool cont = descend(depth + 1);
            pop(depth, v);
            if (!cont) return false;
        }
        return true;
    }

    void push(int depth, i64 v) {
        x_[static_cast<size_t>(depth)] = v;
        int rank = lat_.rank;
        for (size_t ci = 0; ci < states_.size(); ++ci) {
            auto& st = states_[ci];
            const auto& c = *st.c;
            if (!c.linear.empty())
                st.lin_fixed = checked_add(st.lin_fixed,
                                           checked_mul(c.linear[static_cast<size_t>(depth)], v));
            if (c.with_square) {
                // q_fixed gains G_dd v^2 plus the accumulated cross term at d
                const auto& gd = lat_.gram[static_cast<size_t>(depth)];
                st.q_fixed = checked_add(
                    st.q_fixed,
                    checked_add(checked_mul(gd[static_cast<size_t>(depth)], checked_mul(v, v)),
                                checked_mul(cross_[ci][static_cast<size_t>(depth)], v)));
                for (int j = depth + 1; j < rank; ++j) {
                    i64 g = gd[static_cast<size_t>(j)];
                    if (g != 0)
                        cross_[ci][static_cast<size_t>(j)] = checked_add(
                            cross_[ci][static_cast<size_t>(j)], checked_mul(2 * g, v));
                }
            }
        }
    }

    void pop(int depth, i64 v) {
        int rank = lat_.rank;
        for (size_t ci = 0; ci < states_.size(); ++ci) {
            auto& st = states_[ci];
            const auto& c = *st.c;
            if (!c.linear.empty())
                st.lin_fixed = checked_sub(st.lin_fixed,
                                           checked_mul(c.linear[static_cast<size_t>(depth)], v));
            if (c.with_square) {
                const auto& gd = lat_.gram[static_cast<size_t>(depth)];
                for (int j = depth + 1; j < rank; ++j) {
                    i64 g = gd[static_cast<size_t>(j)];
                    if (g != 0)
                        cross_[ci][static_cast<size_t>(j)] = checked_sub(
                            cross_[ci][static_cast<size_t>(j)], checked_mul(2 * g, v));
                }
                st.q_fixed = checked_sub(
                    st.q_fixed,
                    checked_add(checked_mul(gd[static_cast<size_t>(depth)], checked_mul(v, v)),
                                checked_mul(cross_[ci][static_cast<size_t>(depth)], v)));
            }
        }
        x_[static_cast<size_t>(depth)] = 0;
    }

    const IntersectionLattice& lat_;
    i64 bound_;
    const std::function<bool(const std::vector<i64>&)>& visitor_;
    std::vector<ConstraintState> states_;
    std::vector<std::vector<i64>> cross_; // per constraint
    std::vector<i64> x_;
    i64 first_lo_ = 0, first_hi_ = 0;
};

} // namespace

void BoxSearch::visit(const std::function<bool(const std::vector<i64>&)>& visitor) const {
    Runner r(*lattice_, bound_, constraints_, visitor);
    r.run(-bound_, bound_);
}

std::vector<std::vector<i64>> BoxSearch::collect(int jobs) const {
    if (jobs <= 1) {
        std::vector<std::vector<i64>> out;
        visit([&](const std::vector<i64>& x) {
            out.push_back(x);
            return true;
        });
        return out;
    }
    // partition the first coordinate; each slice is already lex-sorted, and
    // slices are concatenated in coordinate order
    i64 span = 2 * bound_ + 1;
    int workers = std::min<i64>(jobs, span);
    std::vector<std::future<std::vector<std::vector<i64>>>> futs;
    for (int w = 0; w < workers; ++w) {
        i64 lo = -bound_ + span * w / workers;
        i64 hi = -bound_ + span * (w + 1) / workers - 1;
        futs.push_back(std::async(std::launch::async, [this, lo, hi]() {
            std::vector<std::vector<i64>> out;
            auto cb = [&](const std::vector<i64>& x) {
                out.push_back(x);
                return true;
            };
            std::function<bool(const std::vector<i64>&)> fn = cb;
            Runner r(*lattice_, bound_, constraints_, fn);
            r.run(lo, hi);
            return out;
        }));
    }
    std::vector<std::vector<i64>> out;
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::optional<std::vector<i64>> BoxSearch::first(int jobs) const {
    if (jobs <= 1) {
        std::optional<std::vector<i64>> hit;
        visit([&](const std::vector<i64>& x) {
            hit = x;
            return false;
        });
        return hit;
    }
    i64 span = 2 * bound_ + 1;
    int workers = std::min<i64>(jobs, span);
    std::vector<std::future<std::optional<std::vector<i64>>>> futs;
    for (int w = 0; w < workers; ++w) {
        i64 lo = -bound_ + span * w / workers;
        i64 hi = -bound_ + span * (w + 1) / workers - 1;
        futs.push_back(std::async(std::launch::async, [this, lo, hi]() {
            std::optional<std::vector<i64>> hit;
            auto cb = [&](const std::vector<i64>& x) {
                hit = x;
                return false;
            };
            std::function<bool(const std::vector<i64>&)> fn = cb;
            Runner r(*lattice_, bound_, constraints_, fn);
            r.run(lo, hi);
            return hit;
        }));
    }
    // the earliest first-coordinate slice with a hit wins (lex order)
    for (auto& f : futs) {
        auto hit = f.get();
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace symsum
