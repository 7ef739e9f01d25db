#pragma once

#include "reptiler/fills.hpp"

#include <optional>

namespace reptiler {

enum class SideLabel { A, B, C, D };

inline const char* side_label_name(SideLabel s) {
    switch (s) {
        case SideLabel::A: return "a";
        case SideLabel::B: return "b";
        case SideLabel::C: return "c";
        default: return "d";
    }
}

/// A barrier base: its exact length and the two end angles.
template <class N>
struct PatchProblem {
    N base_length;
    FillTarget<N> left_angle, right_angle;
};

/// One tile of a first-layer candidate: which side lies on the base and
/// whether the side is traversed against its native orientation.
struct PatchTile {
    SideLabel side;
    bool flipped;  // swaps which endpoint angle faces left
    friend bool operator==(const PatchTile&, const PatchTile&) = default;
    friend auto operator<=>(const PatchTile&, const PatchTile&) = default;
};

/// A first-layer tile sequence along the base satisfying the exact
/// angle-sum necessary conditions: a superset of extendable tilings.
struct PatchCandidate {
    std::vector<PatchTile> tiles;
    FillSolution left_fill;                // fill of the left end angle
    std::vector<FillSolution> point_fills; // fill of pi at each partition point
    FillSolution right_fill;               // fill of the right end angle
    friend bool operator==(const PatchCandidate& a, const PatchCandidate& b) {
        return a.tiles == b.tiles;
    }
};

namespace detail {

// Endpoint angle tags of each side, in native orientation (left, right):
// side a runs A->B, b runs B->C, c runs C->D, d runs D->A.
inline std::pair<AngleTag, AngleTag> side_end_tags(SideLabel s) {
    switch (s) {
        case SideLabel::A: return {AngleTag::ALPHA, AngleTag::BETA};
        case SideLabel::B: return {AngleTag::BETA, AngleTag::GAMMA};
        case SideLabel::C: return {AngleTag::GAMMA, AngleTag::DELTA};
        default: return {AngleTag::DELTA, AngleTag::ALPHA};
    }
}

// Re-maps BETA/DELTA onto the collapsed HALF_PI token when present.
template <class N>
AngleTag collapse_tag(AngleTag t, const std::vector<AngleToken<N>>& tokens) {
    if (t != AngleTag::BETA && t != AngleTag::DELTA) return t;
    for (const auto& tk : tokens)
        if (tk.tag == AngleTag::HALF_PI) return AngleTag::HALF_PI;
    return t;
}

}  // namespace detail

/// Complete list of first-layer candidates for the barrier base. The
/// emptiness of the result refutes the barrier; non-emptiness only
/// means "not refuted by first-layer counting".
template <class N>
std::vector<PatchCandidate> enumerate_patches(const QuadSpec<N>& q,
                                              const PatchProblem<N>& prob,
                                              int max_tiles = -1) {
    if (prob.base_length.sign() <= 0)
        throw ParameterOutOfRange("barrier base length must be positive");
    std::vector<AngleToken<N>> tokens = instance_tokens(q);

    const N* side_len[4] = {&q.a, &q.b, &q.c, &q.d};
    if (max_tiles < 0) {
        N mn = q.a;
        for (const N* s : {&q.b, &q.c, &q.d})
            if ((*s - mn).sign() < 0) mn = *s;
        max_tiles = (int)upper_int_bound(prob.base_length / mn);
    }

    // Fill caches: end fills that contain a given tag, and pi fills that
    // contain a given (right, left) adjacent pair.
    auto end_fill = [&](const FillTarget<N>& target,
                        AngleTag tag) -> std::optional<FillSolution> {
        for (const auto& f : enumerate_vertex_fills(tokens, target))
            if (f[tag] >= 1) return f;
        return std::nullopt;
    };
    FillTarget<N> pi_target = FillTarget<N>::pi_like(q.a);
    std::vector<FillSolution> pi_fills = enumerate_vertex_fills(tokens, pi_target);
    auto point_fill = [&](AngleTag right_of_prev,
                          AngleTag left_of_next) -> std::optional<FillSolution> {
        int need_r = right_of_prev == left_of_next ? 2 : 1;
        for (const auto& f : pi_fills)
            if (f[right_of_prev] >= need_r && f[left_of_next] >= 1) return f;
        return std::nullopt;
    };

    std::vector<PatchCandidate> out;
    std::vector<PatchTile> seq;
    std::vector<FillSolution> fills_at_points;
    FillSolution left_witness;

    auto rec = [&](auto&& self, const N& acc, AngleTag prev_right) -> void {
        if (acc == prob.base_length) {
            if (auto rf = end_fill(prob.right_angle, prev_right))
                out.push_back(PatchCandidate{seq, left_witness, fills_at_points, *rf});
            return;
        }
        if ((int)seq.size() >= max_tiles) return;
        for (int si = 0; si < 4; ++si) {
            N next = acc + *side_len[si];
            if ((next - prob.base_length).sign() > 0) continue;
            auto [lt, rt] = detail::side_end_tags((SideLabel)si);
            for (bool flip : {false, true}) {
                AngleTag left = detail::collapse_tag(flip ? rt : lt, tokens);
                AngleTag right = detail::collapse_tag(flip ? lt : rt, tokens);
                if (seq.empty()) {
                    auto w = end_fill(prob.left_angle, left);
                    if (!w) continue;
                    left_witness = *w;
                    seq.push_back(PatchTile{(SideLabel)si, flip});
                    self(self, next, right);
                    seq.pop_back();
                } else {
                    auto w = point_fill(prev_right, left);
                    if (!w) continue;
                    fills_at_points.push_back(*w);
                    seq.push_back(PatchTile{(SideLabel)si, flip});
                    self(self, next, right);
                    seq.pop_back();
                    fills_at_points.pop_back();
                }
            }
        }
    };
    rec(rec, q.a.zero(), AngleTag::ALPHA);
    std::sort(out.begin(), out.end(), [](const PatchCandidate& x, const PatchCandidate& y) {
        return x.tiles < y.tiles;
    });
    return out;
}

}  // namespace reptiler
