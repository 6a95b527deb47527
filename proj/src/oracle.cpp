#include "pdwpf/lattice.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace pdwpf {

namespace {

// Edge codes: horizontal +1 = right-pointing (R), -1 = left (L); vertical
// +1 = up (U), -1 = down (D).  At a vertex the conserved combination is
// h_right = h_left + v_bottom - v_top, and every (h,v) pair with a valid
// outcome lands on one of the six admissible vertex types.
constexpr int R = 1, L = -1, U = 1, D = -1;

struct Step {
    int vt;
    int hr;
    VertexType type;
};

// Transitions for a given (h_left, v_bottom).
std::array<Step, 2> transitions(int h, int vb, int& count) {
    if (h == R && vb == U) {
        count = 1;
        return {{{U, R, VertexType::a_plus}, {}}};
    }
    if (h == R && vb == D) {
        count = 2;
        return {{{U, L, VertexType::c_plus}, {D, R, VertexType::b_minus}}};
    }
    if (h == L && vb == U) {
        count = 2;
        return {{{U, L, VertexType::b_plus}, {D, R, VertexType::c_minus}}};
    }
    count = 1;
    return {{{D, L, VertexType::a_minus}, {}}};
}

struct OracleProblem {
    std::vector<Rat> row_x;   // bottom row first
    std::vector<int> left;    // per row
    std::vector<int> right;   // per row
    bool bottom_fixed = true;
    unsigned bottom_mask = 0; // bit j set = U
    int bottom_up_count = -1; // summed bottom: required U count, -1 = free
    bool top_fixed = true;
    unsigned top_mask = 0;
    int top_down_count = -1; // summed top: required D count, -1 = free
};

int popcount(unsigned v) {
    int c = 0;
    for (; v; v &= v - 1) ++c;
    return c;
}

Rat run_dp(const OracleProblem& p, const std::vector<Rat>& ys, const WeightScheme& scheme,
           bool unit_weights) {
    const int N = static_cast<int>(ys.size());
    const unsigned states = 1u << N;
    std::vector<Rat> amp(states, Rat(0));
    if (p.bottom_fixed) {
        amp[p.bottom_mask] = Rat(1);
    } else {
        for (unsigned s = 0; s < states; ++s)
            if (p.bottom_up_count < 0 || popcount(s) == p.bottom_up_count) amp[s] = Rat(1);
    }

    // h-channel index: 0 = L, 1 = R.
    auto hidx = [](int h) { return h == R ? 1 : 0; };
    std::vector<Rat> cur[2], nxt[2];
    for (size_t i = 0; i < p.row_x.size(); ++i) {
        const Rat& x = p.row_x[i];
        // weight table per column and vertex type
        std::array<std::vector<Rat>, 6> wt;
        for (int t = 0; t < 6; ++t) {
            wt[t].reserve(ys.size());
            for (const Rat& y : ys)
                wt[t].push_back(unit_weights
                                    ? Rat(1)
                                    : vertex_weight(static_cast<VertexType>(t), x, y, scheme));
        }
        cur[0].assign(states, Rat(0));
        cur[1].assign(states, Rat(0));
        cur[hidx(p.left[i])] = amp;
        for (int j = 0; j < N; ++j) {
            nxt[0].assign(states, Rat(0));
            nxt[1].assign(states, Rat(0));
            for (int hc = 0; hc < 2; ++hc) {
                const int h = (hc == 1) ? R : L;
                for (unsigned s = 0; s < states; ++s) {
                    const Rat& a = cur[hc][s];
                    if (a.is_zero()) continue;
                    const int vb = (s >> j) & 1u ? U : D;
                    int nsteps = 0;
                    auto steps = transitions(h, vb, nsteps);
                    for (int k = 0; k < nsteps; ++k) {
                        const Step& st = steps[static_cast<size_t>(k)];
                        const unsigned ns =
                            (st.vt == U) ? (s | (1u << j)) : (s & ~(1u << j));
                        nxt[hidx(st.hr)][ns] +=
                            a * wt[static_cast<size_t>(st.type)][static_cast<size_t>(j)];
                    }
                }
            }
            cur[0].swap(nxt[0]);
            cur[1].swap(nxt[1]);
        }
        amp = cur[hidx(p.right[i])];
    }

    Rat total(0);
    for (unsigned s = 0; s < states; ++s) {
        if (amp[s].is_zero()) continue;
        if (p.top_fixed) {
            if (s != p.top_mask) continue;
        } else if (p.top_down_count >= 0 && N - popcount(s) != p.top_down_count) {
            continue;
        }
        total += amp[s];
    }
    return total;
}

OracleProblem build_problem(const LatticeSpec& spec) {
    const BoundarySpec& b = spec.boundary;
    const RapidityConfig& r = spec.rapidities;
    const int N = b.N;
    if (N < 1 || N > 20) throw std::invalid_argument("oracle: column count out of range");
    if (static_cast<int>(r.ys.size()) != N)
        throw std::invalid_argument("oracle: |ys| must equal N");
    const unsigned full = (1u << N) - 1u;
    OracleProblem p;
    auto want_xs = [&](int k) {
        if (static_cast<int>(r.xs.size()) != k)
            throw std::invalid_argument("oracle: |xs| must equal the row count " +
                                        std::to_string(k));
    };
    switch (b.family) {
    case BoundaryFamily::DWBC:
        if (b.n != N) throw std::invalid_argument("oracle: DWBC requires n = N");
        want_xs(N);
        p.row_x = r.xs;
        p.left.assign(static_cast<size_t>(N), R);
        p.right.assign(static_cast<size_t>(N), L);
        p.bottom_mask = 0;   // all down
        p.top_fixed = true;
        p.top_mask = full;   // all up
        return p;
    case BoundaryFamily::PDW_TOPSUM:
        if (b.n < 1 || b.n > N) throw std::invalid_argument("oracle: need 1 <= n <= N");
        want_xs(b.n);
        p.row_x = r.xs;
        p.left.assign(static_cast<size_t>(b.n), R);
        p.right.assign(static_cast<size_t>(b.n), L);
        p.bottom_mask = 0;
        p.top_fixed = false; // summed; ice rule fixes the arrow counts
        return p;
    case BoundaryFamily::PDW_Z2:
        if (b.n < 1 || b.n > N) throw std::invalid_argument("oracle: need 1 <= n <= N");
        want_xs(b.n);
        p.row_x = r.xs;
        p.left.assign(static_cast<size_t>(b.n), L);
        p.right.assign(static_cast<size_t>(b.n), R);
        p.bottom_mask = full; // all up
        p.top_fixed = false;
        return p;
    case BoundaryFamily::PDW_SPLIT:
        if (b.n < 1 || b.n > b.m || b.m > N)
            throw std::invalid_argument("oracle: PDW_SPLIT needs n <= m <= N");
        want_xs(b.n);
        p.row_x = r.xs;
        p.left.assign(static_cast<size_t>(b.n), R);
        p.right.assign(static_cast<size_t>(b.n), L);
        p.bottom_fixed = false;
        p.bottom_up_count = N - b.m;
        p.top_fixed = false;
        p.top_down_count = b.m - b.n;
        return p;
    case BoundaryFamily::SCALAR_PRODUCT: {
        if (b.n < 1 || b.n > N) throw std::invalid_argument("oracle: need 1 <= n <= N");
        want_xs(b.n);
        if (static_cast<int>(r.bs.size()) != b.n)
            throw std::invalid_argument("oracle: SCALAR_PRODUCT needs |bs| = n");
        p.row_x = r.xs;
        p.row_x.insert(p.row_x.end(), r.bs.begin(), r.bs.end());
        p.left.assign(static_cast<size_t>(b.n), L);
        p.left.insert(p.left.end(), static_cast<size_t>(b.n), R);
        p.right.assign(static_cast<size_t>(b.n), R);
        p.right.insert(p.right.end(), static_cast<size_t>(b.n), L);
        p.bottom_mask = full; // all up
        p.top_fixed = true;
        p.top_mask = full;    // all up
        return p;
    }
    }
    throw std::logic_error("oracle: unknown family");
}

} // namespace

Rat oracle_partition_function(const LatticeSpec& spec) {
    return run_dp(build_problem(spec), spec.rapidities.ys, spec.weights, false);
}

std::int64_t count_configurations(const LatticeSpec& spec) {
    LatticeSpec unit = spec;
    if (unit.rapidities.xs.empty()) {
        // Counting needs no rapidities; synthesize placeholders of the right
        // shape so the walk can run.
        int rows = spec.boundary.n;
        unit.rapidities.xs.assign(static_cast<size_t>(rows), Rat(0));
    }
    if (unit.rapidities.ys.empty())
        unit.rapidities.ys.assign(static_cast<size_t>(spec.boundary.N), Rat(0));
    if (spec.boundary.family == BoundaryFamily::SCALAR_PRODUCT && unit.rapidities.bs.empty())
        unit.rapidities.bs.assign(static_cast<size_t>(spec.boundary.n), Rat(0));
    const Rat c = run_dp(build_problem(unit), unit.rapidities.ys, unit.weights, true);
    // exact integer by construction
    return static_cast<std::int64_t>(mpz_get_si(c.raw().get_num().get_mpz_t()));
}

const char* family_name(BoundaryFamily f) {
    switch (f) {
    case BoundaryFamily::DWBC: return "dwbc";
    case BoundaryFamily::PDW_TOPSUM: return "pdw-topsum";
    case BoundaryFamily::PDW_SPLIT: return "pdw-split";
    case BoundaryFamily::PDW_Z2: return "pdw-z2";
    case BoundaryFamily::SCALAR_PRODUCT: return "scalar-product";
    }
    return "?";
}

} // namespace pdwpf
