#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/braess.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/enumeration.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/parallel.hpp"
#include "kemeny/report_json.hpp"
#include "kemeny/resistance.hpp"
#include "kemeny/separation.hpp"

namespace kemeny::verify {

inline constexpr std::size_t kMaxListedFailures = 5;

/// Pass count for one property over a family of cases. Only the first few
/// failures are kept, in case order.
struct Check {
    std::string name;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    template <typename Describe>
    void record(bool ok, Describe&& describe) {
        ++total;
        if (ok) {
            ++passed;
        } else if (failures.size() < kMaxListedFailures) {
            failures.push_back(describe());
        }
    }

    void merge(const Check& other) {
        total += other.total;
        passed += other.passed;
        for (const auto& f : other.failures) {
            if (failures.size() < kMaxListedFailures) failures.push_back(f);
        }
    }

    [[nodiscard]] bool ok() const { return passed == total; }
};

inline Json check_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["total"] = c.total;
    j["ok"] = c.ok();
    j["failures"] = c.failures;
    return j;
}

/// Merge per-slot checks (from parallel_for) in slot order.
inline std::vector<Check> merge_slots(const std::vector<std::string>& names, const std::vector<std::vector<Check>>& slots) {
    std::vector<Check> out;
    for (const auto& n : names) out.emplace_back(n);
    for (const auto& slot : slots) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k].merge(slot[k]);
    }
    return out;
}

inline std::vector<Check> fresh(const std::vector<std::string>& names) {
    std::vector<Check> out;
    for (const auto& n : names) out.emplace_back(n);
    return out;
}

inline std::string describe(const Graph& g) {
    std::string s = "n=" + std::to_string(g.n()) + " E={";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) s += ",";
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
        first = false;
    }
    return s + "}";
}

inline std::string describe(const Graph& g, Vertex v) { return describe(g) + " v=" + std::to_string(v); }

// ---------------------------------------------------------------------------
// Corpora

using CanonKey = std::pair<std::size_t, std::uint64_t>;

/// Connected graphs up to isomorphism, each rooted at every vertex, with
/// one exact profile per graph.
struct RootedCorpus {
    std::vector<RootedGraph> items;
    std::vector<GraphProfile> profiles;  ///< profiles[i] belongs to items[i].first
    std::map<CanonKey, std::size_t> index;

    [[nodiscard]] std::size_t size() const { return items.size(); }

    /// Item whose rooted graph is isomorphic to (g, v).
    [[nodiscard]] std::size_t lookup(const Graph& g, Vertex v) const {
        auto it = index.find(rooted_canonical_key(g, v));
        if (it == index.end()) throw ConsistencyError("rooted graph outside the corpus: " + describe(g, v));
        return it->second;
    }
};

inline RootedCorpus rooted_class_corpus(std::size_t n_max) {
    RootedCorpus c;
    for (const Graph& g : connected_graph_classes(n_max)) {
        const GraphProfile p = profile(g);
        for (Vertex v = 0; v < g.n(); ++v) {
            c.index.emplace(rooted_canonical_key(g, v), c.items.size());
            c.items.emplace_back(g, v);
            c.profiles.push_back(p);
        }
    }
    return c;
}

inline std::vector<Graph> random_connected_graphs(Rng& rng, std::size_t count, std::size_t n_lo, std::size_t n_hi) {
    std::uniform_int_distribution<std::size_t> size_pick(n_lo, n_hi);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_graph(size_pick(rng), rng));
    return out;
}

/// Number of connected labelled graphs on n vertices by the recurrence
/// c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2).
inline std::uint64_t connected_count_recurrence(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    auto binom = [](std::size_t a, std::size_t b) {
        std::uint64_t r = 1;
        for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    auto pow2 = [](std::size_t e) { return std::uint64_t{1} << e; };
    for (std::size_t k = 1; k <= n; ++k) {
        std::uint64_t total = pow2(k * (k - 1) / 2);
        for (std::size_t j = 1; j < k; ++j) total -= binom(k - 1, j - 1) * c[j] * pow2((k - j) * (k - j - 1) / 2);
        c[k] = total;
    }
    return c[n];
}

// ---------------------------------------------------------------------------
// closed_forms

inline Check check_family_kemeny(std::size_t n_lo, std::size_t n_hi) {
    Check c("family_kemeny");
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        for (Family f : {Family::complete, Family::path, Family::star}) {
            const Rational closed = kemeny_closed(f, n);
            const Rational direct = kemeny_resistance(make_family(f, n)).kemeny;
            c.record(closed == direct, [&] {
                return std::string(to_string(f)) + " n=" + std::to_string(n) + ": " + closed.str() + " vs " + direct.str();
            });
        }
    }
    return c;
}

inline Check check_family_moments(std::size_t n_lo, std::size_t n_hi) {
    Check c("family_moments");
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        for (Family f : {Family::complete, Family::path, Family::star}) {
            const Graph g = make_family(f, n);
            const auto direct = all_moments(g);
            const std::size_t last = f == Family::star ? 1 : n;
            for (Vertex v = 0; v < last; ++v) {
                const Rational closed = moment_closed(f, n, v);
                c.record(closed == direct[v].value, [&] {
                    return std::string(to_string(f)) + " n=" + std::to_string(n) + " v=" + std::to_string(v);
                });
            }
        }
    }
    return c;
}

inline Check check_barbell_direct(std::size_t a_hi, std::size_t bc_hi) {
    struct Case {
        std::size_t a, b, c;
    };
    std::vector<Case> cases;
    for (std::size_t a = 2; a <= a_hi; ++a) {
        for (std::size_t b = 1; b <= bc_hi; ++b) {
            for (std::size_t c = 1; c <= bc_hi; ++c) cases.push_back({a, b, c});
        }
    }
    std::vector<char> ok(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        ok[i] = barbell_result(cases[i].a, cases[i].b, cases[i].c, true).verified_against_direct;
    });
    Check c("barbell_direct");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        c.record(ok[i], [&] {
            return "a=" + std::to_string(cases[i].a) + " b=" + std::to_string(cases[i].b) + " c=" + std::to_string(cases[i].c);
        });
    }
    return c;
}

/// thirds(n) and best(n) against the general barbell expression, and best > thirds.
inline Check check_barbell_corollaries(std::size_t n_hi) {
    Check c("barbell_corollaries");
    for (std::size_t n = 9; n <= n_hi; n += 3) {
        const std::size_t t = n / 3;
        const Rational thirds = kemeny_barbell_thirds(n);
        const Rational best = kemeny_barbell_best(n);
        const bool ok = thirds == kemeny_barbell(t, t, t) && best == kemeny_barbell(t + 2, t - 1, t - 1) && best > thirds;
        c.record(ok, [&] { return "n=" + std::to_string(n); });
    }
    return c;
}

/// Finite sweep over every barbell on n vertices (a >= 2, b, c >= 1):
/// reported, not asserted.
inline Json barbell_max_sweep(std::size_t n_hi) {
    Json rows = Json::array();
    std::size_t matches = 0, total = 0;
    for (std::size_t n = 9; n <= n_hi; n += 3) {
        Rational top;
        std::vector<std::array<std::size_t, 3>> arg;
        for (std::size_t a = 2; a + 2 <= n; ++a) {
            for (std::size_t b = 1; a + b + 1 <= n; ++b) {
                const std::size_t c = n - a - b;
                const Rational k = kemeny_barbell(a, b, c);
                if (arg.empty() || k > top) {
                    top = k;
                    arg.clear();
                }
                if (k == top) arg.push_back({a, b, c});
            }
        }
        const std::size_t t = n / 3;
        const bool match = arg.size() == 1 && arg[0] == std::array<std::size_t, 3>{t + 2, t - 1, t - 1};
        ++total;
        if (match) ++matches;
        Json r;
        r["n"] = n;
        r["argmax"] = arg;
        put_rational(r, "max", top);
        r["matches_best"] = match;
        rows.push_back(std::move(r));
    }
    Json out;
    out["n_checked"] = total;
    out["argmax_is_best"] = matches;
    out["rows"] = std::move(rows);
    return out;
}

inline Check check_pendants(const RootedCorpus& corpus, std::size_t k_hi) {
    std::vector<std::vector<Check>> slots(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t i) {
        slots[i] = fresh({"k_pendants"});
        const auto& [g, v] = corpus.items[i];
        const GraphProfile& p = corpus.profiles[i];
        for (std::size_t k = 1; k <= k_hi; ++k) {
            const Rational formula = kemeny_k_pendants(p.m, p.kemeny, p.moment(v), k);
            const Rational direct = kemeny_resistance(attach_pendants(g, v, k)).kemeny;
            slots[i][0].record(formula == direct, [&] { return describe(g, v) + " k=" + std::to_string(k); });
        }
    });
    return merge_slots({"k_pendants"}, slots)[0];
}

/// Triplet formulas and the five comparison statements over every
/// (g, v) with g in `graphs` (m >= 1). Direct values are computed once per
/// rooted isomorphism class.
inline std::vector<Check> check_triplets(const std::vector<Graph>& graphs) {
    struct Item {
        std::size_t graph;
        Vertex v;
        CanonKey key;
    };
    std::vector<std::size_t> offsets(graphs.size() + 1, 0);
    for (std::size_t i = 0; i < graphs.size(); ++i) offsets[i + 1] = offsets[i] + (graphs[i].m() >= 1 ? graphs[i].n() : 0);
    std::vector<Item> items(offsets.back());
    parallel_for(graphs.size(), [&](std::size_t i) {
        for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) {
            const Vertex v = k - offsets[i];
            items[k] = Item{i, v, rooted_canonical_key(graphs[i], v)};
        }
    });

    std::map<CanonKey, std::size_t> slot_of;
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (slot_of.emplace(items[k].key, reps.size()).second) reps.push_back(k);
    }
    std::vector<std::array<Rational, 4>> direct(reps.size());
    parallel_for(reps.size(), [&](std::size_t r) {
        const Item& it = items[reps[r]];
        const Graph& g = graphs[it.graph];
        for (auto variant : {TripletVariant::bar, TripletVariant::tilde, TripletVariant::hat, TripletVariant::star}) {
            direct[r][static_cast<std::size_t>(variant)] = kemeny_resistance(triplet_graph(g, it.v, variant)).kemeny;
        }
    });

    const std::vector<std::string> names{"triplet_formulas",       "comparison_a_hat_gt_tilde", "comparison_b_star_vs_hat",
                                         "comparison_c_star_gt_tilde", "comparison_d_hat_gt_bar", "comparison_e_star_ge_bar"};
    std::vector<std::vector<Check>> slots(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        slots[i] = fresh(names);
        const Graph& g = graphs[i];
        if (g.m() < 1) return;
        const GraphProfile p = profile(g);
        const std::size_t m = p.m;
        const ComparisonQuantities den = comparison_denominators(m);
        for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) {
            const Vertex v = items[k].v;
            const auto& d = direct[slot_of.at(items[k].key)];
            const Rational &bar = d[0], &tilde = d[1], &hat = d[2], &star = d[3];
            const TripletValues f = kemeny_triplet_variants(m, p.kemeny, p.moment(v));
            auto where = [&] { return describe(g, v); };
            slots[i][0].record(f.bar == bar && f.tilde == tilde && f.hat == hat && f.star == star, where);

            const ComparisonQuantities q = comparison_quantities(m, p.kemeny, p.moment(v));
            // each numerator / denominator must reproduce the direct difference
            const bool a_id = q.hat_vs_tilde / den.hat_vs_tilde == hat - tilde;
            const bool b_id = q.star_vs_hat / den.star_vs_hat == star - hat;
            const bool c_id = q.star_vs_tilde / den.star_vs_tilde == star - tilde;
            const bool d_id = q.hat_vs_bar / den.hat_vs_bar == hat - bar;
            const bool e_id = q.star_vs_bar / den.star_vs_bar == star - bar;

            slots[i][1].record(a_id && (m < 4 || hat > tilde), where);
            slots[i][2].record(b_id && (m >= 2 ? star > hat : star < hat), where);
            slots[i][3].record(c_id && (m < 4 || star > tilde), where);
            slots[i][4].record(d_id && hat > bar, where);
            const bool is_p2 = g.n() == 2;
            slots[i][5].record(e_id && star >= bar && ((star == bar) == is_p2), where);
        }
    });
    return merge_slots(names, slots);
}

/// S_4 centre: hat - tilde numerator is -38 at m = 3; P_2: bar and star agree.
inline Check check_triplet_special_cases() {
    Check c("triplet_special_cases");
    const GraphProfile s4 = profile(make_star(4));
    const Rational q = comparison_quantities(s4.m, s4.kemeny, s4.moment(0)).hat_vs_tilde;
    c.record(s4.m == 3 && q == Rational(-38), [&] { return "S_4 centre: " + q.str(); });
    const Rational hat = kemeny_resistance(triplet_graph(make_star(4), 0, TripletVariant::hat)).kemeny;
    const Rational tilde = kemeny_resistance(triplet_graph(make_star(4), 0, TripletVariant::tilde)).kemeny;
    c.record(hat < tilde, [] { return std::string("S_4 centre: hat not below tilde"); });
    const Graph p2 = make_path(2);
    const Rational bar = kemeny_resistance(triplet_graph(p2, 0, TripletVariant::bar)).kemeny;
    const Rational star = kemeny_resistance(triplet_graph(p2, 0, TripletVariant::star)).kemeny;
    c.record(bar == star, [&] { return "P_2: " + bar.str() + " vs " + star.str(); });
    return c;
}

inline Check check_mesh_star(std::size_t n_hi) {
    Check c("mesh_star");
    for (std::size_t n = 2; n <= n_hi; ++n) c.record(mesh_star_equivalence(n), [&] { return "n=" + std::to_string(n); });
    return c;
}

// ---------------------------------------------------------------------------
// separation

namespace detail {

inline SeparationTerms terms_from_profiles(const std::vector<const GraphProfile*>& prof, const OneSumChain& chain) {
    SeparationTerms t;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const ChainPart& part = chain[i];
        t.m.push_back(prof[i]->m);
        t.kemeny.push_back(prof[i]->kemeny);
        t.moment_left.push_back(prof[i]->moment(part.attach_left));
        t.moment_right.push_back(prof[i]->moment(part.attach_right));
        t.internal_resistance.push_back(prof[i]->resistance(part.attach_left, part.attach_right));
    }
    return t;
}

}  // namespace detail

/// Every ordered pair of corpus items glued at their roots: cut-vertex
/// resistance additivity, the two-part Kemeny formula (directly and as a
/// chain), and the chain moment at every vertex. Fills `kemeny_table`
/// (row-major, size^2) with the directly computed composite constants.
inline std::vector<Check> check_separation_pairs(const RootedCorpus& corpus, std::vector<Rational>* kemeny_table = nullptr) {
    const std::size_t n = corpus.size();
    const std::vector<std::string> names{"cut_vertex_resistance", "one_separation_kemeny", "chain_kemeny_two_parts",
                                         "chain_moment_two_parts"};
    std::vector<std::vector<Check>> slots(n * n);
    if (kemeny_table) kemeny_table->assign(n * n, Rational(0));
    parallel_for(n * n, [&](std::size_t idx) {
        slots[idx] = fresh(names);
        const std::size_t i = idx / n, j = idx % n;
        const auto& [g1, v1] = corpus.items[i];
        const auto& [g2, v2] = corpus.items[j];
        const GraphProfile& p1 = corpus.profiles[i];
        const GraphProfile& p2 = corpus.profiles[j];
        if (p1.m + p2.m == 0) return;
        const OneSum s = one_sum(g1, v1, g2, v2);
        const GraphProfile full = profile(s.graph);
        if (kemeny_table) (*kemeny_table)[idx] = full.kemeny;
        auto where = [&] { return describe(g1, v1) + " + " + describe(g2, v2); };

        bool additive = true;
        for (Vertex x = 0; x < g1.n(); ++x) {
            for (Vertex y = 0; y < g2.n(); ++y) {
                additive = additive &&
                           full.resistance(s.left_map[x], s.right_map[y]) == p1.resistance(x, v1) + p2.resistance(v2, y);
            }
        }
        slots[idx][0].record(additive, where);
        slots[idx][1].record(kemeny_one_sep(p1, v1, p2, v2) == full.kemeny, where);

        const OneSumChain chain({ChainPart{g1, v1, v1}, ChainPart{g2, v2, v2}});
        slots[idx][2].record(kemeny_chain(detail::terms_from_profiles({&p1, &p2}, chain)) == full.kemeny, where);

        const std::vector<GraphProfile> left_first{p1, p2};
        const std::vector<GraphProfile> right_first{p2, p1};
        bool moments_ok = true;
        for (Vertex x = 0; x < g1.n(); ++x) {
            const OneSumChain from_left({ChainPart{g1, x, v1}, ChainPart{g2, v2, v2}});
            moments_ok = moments_ok && moment_chain(left_first, from_left, x) == full.moment(s.left_map[x]);
        }
        for (Vertex y = 0; y < g2.n(); ++y) {
            const OneSumChain from_right({ChainPart{g2, y, v2}, ChainPart{g1, v1, v1}});
            moments_ok = moments_ok && moment_chain(right_first, from_right, y) == full.moment(s.right_map[y]);
        }
        slots[idx][3].record(moments_ok, where);
    });
    return merge_slots(names, slots);
}

inline std::string describe(const OneSumChain& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += " | ";
        s += describe(chain[i].graph) + " L=" + std::to_string(chain[i].attach_left) + " R=" +
             std::to_string(chain[i].attach_right);
    }
    return s;
}

/// Chains of 3..5 random parts: chain Kemeny formula and chain moment at
/// every vertex of the first part, against the assembled graph.
inline std::vector<Check> check_random_chains(Rng& rng, std::size_t count, std::size_t max_part) {
    std::vector<OneSumChain> chains;
    std::uniform_int_distribution<std::size_t> parts_pick(3, 5);
    for (std::size_t i = 0; i < count; ++i) chains.push_back(random_chain(rng, parts_pick(rng), max_part));
    const std::vector<std::string> names{"chain_kemeny", "chain_moment"};
    std::vector<std::vector<Check>> slots(count);
    parallel_for(count, [&](std::size_t i) {
        slots[i] = fresh(names);
        const OneSumChain& chain = chains[i];
        const ChainSum sum = chain_sum(chain);
        const GraphProfile full = profile(sum.graph);
        auto where = [&] { return describe(chain); };
        slots[i][0].record(kemeny_chain(chain) == full.kemeny, where);

        std::vector<GraphProfile> prof;
        for (const ChainPart& part : chain.parts()) prof.push_back(profile(part.graph));
        bool ok = true;
        for (Vertex x = 0; x < chain[0].graph.n(); ++x) {
            std::vector<ChainPart> parts = chain.parts();
            parts[0].attach_left = x;
            const OneSumChain rooted(std::move(parts));
            ok = ok && moment_chain(prof, rooted, x) == full.moment(sum.maps[0][x]);
        }
        slots[i][1].record(ok, where);
    });
    return merge_slots(names, slots);
}

/// 3..5 random parts sharing one vertex: the star-of-parts formula against
/// direct computation and against the general chain formula.
inline Check check_star_of_parts(Rng& rng, std::size_t count, std::size_t max_part) {
    std::vector<std::vector<RootedGraph>> cases;
    std::uniform_int_distribution<std::size_t> parts_pick(3, 5);
    std::uniform_int_distribution<std::size_t> size_pick(2, max_part);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<RootedGraph> parts;
        const std::size_t k = parts_pick(rng);
        for (std::size_t p = 0; p < k; ++p) {
            Graph g = random_connected_graph(size_pick(rng), rng);
            std::uniform_int_distribution<Vertex> vpick(0, g.n() - 1);
            const Vertex v = vpick(rng);
            parts.emplace_back(std::move(g), v);
        }
        cases.push_back(std::move(parts));
    }
    std::vector<char> ok(count);
    parallel_for(count, [&](std::size_t i) {
        const OneSumChain chain = star_of_parts_chain(cases[i]);
        const Rational direct = kemeny_resistance(chain_sum(chain).graph).kemeny;
        const Rational formula = kemeny_star_of_parts(cases[i]);
        ok[i] = formula == direct && formula == kemeny_chain(chain);
    });
    Check c("star_of_parts");
    for (std::size_t i = 0; i < count; ++i) c.record(ok[i], [&] { return describe(star_of_parts_chain(cases[i])); });
    return c;
}

// ---------------------------------------------------------------------------
// trees and enumeration

inline std::vector<Check> check_prufer(std::size_t n_hi) {
    Check round("prufer_roundtrip");
    Check count("tree_count_and_shape");
    for (std::size_t n = 1; n <= n_hi; ++n) {
        const TreeEnumeration trees(n);
        std::size_t seen = 0;
        bool shape = true;
        for (auto it = trees.begin(); it != trees.end(); ++it) {
            const Graph t = *it;
            ++seen;
            shape = shape && t.n() == n && t.m() + 1 == n && is_connected(t);
            const PruferSequence seq = trees.sequence(it.index());
            round.record(prufer_encode(t) == seq && prufer_decode(prufer_encode(t), n) == t,
                         [&] { return describe(t); });
        }
        std::size_t cayley = 1;
        for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
        count.record(shape && seen == cayley && trees.size() == cayley, [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(seen) + " trees, expected " + std::to_string(cayley);
        });
    }
    return {round, count};
}

inline std::vector<Check> check_path_max(std::size_t n_lo, std::size_t n_hi) {
    Check k("path_max_kemeny");
    Check mu("path_max_moment");
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const PathMaxResult rk = verify_path_max_kemeny(n);
        k.record(rk.holds, [&] { return "n=" + std::to_string(n) + " max " + rk.max_value.str(); });
        const PathMaxResult rm = verify_path_max_moment(n);
        const Rational expected(static_cast<long>((n - 1) * (n - 1)));
        mu.record(rm.holds && rm.path_value == expected,
                  [&] { return "n=" + std::to_string(n) + " max " + rm.max_value.str(); });
    }
    return {k, mu};
}

/// Resistance formula against the hitting-time oracle; every start vertex
/// must give the same value.
inline Check check_oracle(const std::vector<Graph>& graphs, const std::string& name = "hitting_oracle") {
    std::vector<char> ok(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (g.n() < 2) {
            ok[i] = 1;
            return;
        }
        try {
            const KemenyReport hit = kemeny_hitting_oracle(g);
            bool same = hit.kemeny == kemeny_resistance(g).kemeny;
            for (const Rational& x : *hit.per_start_values) same = same && x == hit.kemeny;
            ok[i] = same;
        } catch (const ConsistencyError&) {
            ok[i] = 0;
        }
    });
    Check c(name);
    for (std::size_t i = 0; i < graphs.size(); ++i) c.record(ok[i], [&] { return describe(graphs[i]); });
    return c;
}

inline Check check_corpus_counts(std::size_t n_hi) {
    const GraphCorpus corpus = connected_corpus(n_hi);
    std::vector<std::uint64_t> by_n(n_hi + 1, 0);
    for (const Graph& g : corpus.graphs) ++by_n[g.n()];
    Check c("connected_corpus_counts");
    for (std::size_t n = 1; n <= n_hi; ++n) {
        const std::uint64_t expected = connected_count_recurrence(n);
        c.record(by_n[n] == expected, [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(by_n[n]) + " vs " + std::to_string(expected);
        });
    }
    return c;
}

// ---------------------------------------------------------------------------
// braess

/// Separated Delta K against the direct value over every pair of corpus
/// items and every set of at most max_set non-edges inside the second part.
/// Direct values come from `kemeny_table` (see check_separation_pairs): the
/// grown composite is isomorphic to item i glued to the item that matches
/// (G2 + S, v2). Every `literal_stride`-th case is also computed directly
/// on the literal composite.
inline std::vector<Check> check_kemdiff_sweep(const RootedCorpus& corpus, const std::vector<Rational>& kemeny_table,
                                              std::size_t max_set, std::size_t literal_stride) {
    const std::size_t n = corpus.size();
    struct Grown {
        EdgeSet edges;
        std::size_t item;  ///< corpus item isomorphic to (G2 + edges, v2)
        Rational kemeny;
        Rational moment;
    };
    std::vector<std::vector<Grown>> grown(n);
    parallel_for(n, [&](std::size_t j) {
        const auto& [g2, v2] = corpus.items[j];
        const EdgeSet candidates = g2.non_edges();
        grown[j].push_back(Grown{{}, j, corpus.profiles[j].kemeny, corpus.profiles[j].moment(v2)});
        std::vector<std::size_t> pick;
        auto extend = [&](auto&& self, std::size_t start) -> void {
            if (!pick.empty()) {
                EdgeSet s;
                for (std::size_t k : pick) s.push_back(candidates[k]);
                const Graph hat = add_edges(g2, s);
                const GraphProfile p = profile(hat);
                grown[j].push_back(Grown{s, corpus.lookup(hat, v2), p.kemeny, p.moment(v2)});
            }
            if (pick.size() == max_set) return;
            for (std::size_t k = start; k < candidates.size(); ++k) {
                pick.push_back(k);
                self(self, k + 1);
                pick.pop_back();
            }
        };
        extend(extend, 0);
    });

    const std::vector<std::string> names{"kemdiff_formula", "sufficiency_no_false_positive", "first_term_nonnegative",
                                         "kemdiff_literal_spot_check"};
    std::vector<std::size_t> case_offset(n + 1, 0);
    std::size_t per_row = 0;
    for (const auto& gj : grown) per_row += gj.size();
    for (std::size_t i = 0; i < n; ++i) case_offset[i + 1] = case_offset[i] + per_row;

    std::vector<std::vector<Check>> slots(n);
    parallel_for(n, [&](std::size_t i) {
        slots[i] = fresh(names);
        const auto& [g1, v1] = corpus.items[i];
        const GraphProfile& p1 = corpus.profiles[i];
        std::size_t case_id = case_offset[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& [g2, v2] = corpus.items[j];
            const GraphProfile& p2 = corpus.profiles[j];
            for (const Grown& gr : grown[j]) {
                ++case_id;
                if (p1.m + p2.m == 0) continue;
                const SeparatedParts parts{p1.m,          p1.kemeny, p1.moment(v1), p2.m,     p2.kemeny,
                                           p2.moment(v2), gr.edges.size(), gr.kemeny, gr.moment};
                const BraessReport rep = delta_kemeny_separated(parts);
                const Rational direct = kemeny_table[i * n + gr.item] - kemeny_table[i * n + j];
                auto where = [&] {
                    std::string s = describe(g1, v1) + " + " + describe(g2, v2) + " S={";
                    for (const Edge& e : gr.edges) s += std::to_string(e.u) + "-" + std::to_string(e.v) + ";";
                    return s + "}";
                };
                slots[i][0].record(rep.delta_kemeny == direct, where);
                slots[i][1].record(!*rep.sufficient || direct.sign() > 0, where);
                slots[i][2].record(rep.separation->first_term.sign() >= 0, where);
                if (literal_stride > 0 && case_id % literal_stride == 0) {
                    const Graph composite = one_sum(g1, v1, g2, v2).graph;
                    slots[i][3].record(delta_kemeny_direct(composite, gr.edges) == rep.delta_kemeny, where);
                }
            }
        }
    });
    return merge_slots(names, slots);
}

/// P_7: {0-2, 4-6} is Braess, each singleton is not.
inline Check check_p7_witness() {
    Check c("p7_braess_set_witness");
    const Graph p7 = make_path(7);
    const Rational both = delta_kemeny_direct(p7, {{0, 2}, {4, 6}});
    const Rational left = delta_kemeny_direct(p7, {{0, 2}});
    const Rational right = delta_kemeny_direct(p7, {{4, 6}});
    c.record(both.sign() > 0, [&] { return "pair: " + both.str(); });
    c.record(left.sign() < 0, [&] { return "0-2: " + left.str(); });
    c.record(right.sign() < 0, [&] { return "4-6: " + right.str(); });
    return c;
}

/// Bound values: 1 at l = 1 for every k >= 2; the unsimplified threshold
/// near 26 at k = 10, l = 1; the rational bound never below the real one.
inline Check check_pendant_star_bound(std::size_t k_hi) {
    Check c("pendant_star_bound_values");
    for (std::size_t k = 2; k <= k_hi; ++k) {
        const PendantStarBound b = pendant_star_bound(k, 1);
        c.record(b.exact && b.bound == Rational(1), [&] { return "k=" + std::to_string(k) + " l=1: " + b.bound.str(); });
    }
    const double raw = pendant_star_bound_raw(10, 1);
    c.record(raw > 26.0 && raw < 27.0, [&] { return "raw k=10 l=1: " + std::to_string(raw); });
    for (std::size_t k = 2; k <= k_hi; ++k) {
        for (std::size_t l = 1; l <= k * (k - 1) / 2; ++l) {
            const PendantStarBound b = pendant_star_bound(k, l);
            const double real = l < k ? (std::sqrt(33.0 * l * l + 50.0 * l + 17) - l - 1) / 8
                                      : (std::sqrt(33.0 * k * k - 30.0 * k + 1) - k - 1) / 8;
            c.record(b.bound.to_double() >= real - 1e-12 && b.bound.to_double() <= real + 1e-6,
                     [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); });
        }
    }
    return c;
}

/// Random (G1, v, k <= 5, l leaf edges) with m1 above the bound: always Braess.
inline Check check_pendant_star_random(Rng& rng, std::size_t count) {
    struct Case {
        Graph g1;
        Vertex v;
        std::size_t k;
        EdgeSet leaf_edges;
    };
    std::vector<Case> cases;
    std::uniform_int_distribution<std::size_t> k_pick(2, 5);
    std::uniform_int_distribution<std::size_t> n_pick(2, 7);
    while (cases.size() < count) {
        const std::size_t k = k_pick(rng);
        std::uniform_int_distribution<std::size_t> l_pick(1, k * (k - 1) / 2);
        const std::size_t l = l_pick(rng);
        Graph g1 = random_connected_graph(n_pick(rng), rng);
        if (!pendant_star_bound(k, l).satisfied_by(g1.m())) continue;
        std::uniform_int_distribution<Vertex> v_pick(0, g1.n() - 1);
        const Vertex v = v_pick(rng);
        EdgeSet pairs;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(g1.n() + a, g1.n() + b);
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(l);
        cases.push_back(Case{std::move(g1), v, k, canonical_edge_set(pairs)});
    }
    std::vector<char> ok(count);
    parallel_for(count, [&](std::size_t i) {
        const Case& cs = cases[i];
        ok[i] = delta_kemeny_direct(attach_pendants(cs.g1, cs.v, cs.k), cs.leaf_edges).sign() > 0;
    });
    Check c("pendant_star_sufficiency");
    for (std::size_t i = 0; i < count; ++i) {
        c.record(ok[i], [&] {
            return describe(cases[i].g1, cases[i].v) + " k=" + std::to_string(cases[i].k) +
                   " l=" + std::to_string(cases[i].leaf_edges.size());
        });
    }
    return c;
}

/// For fixed l, is the unsimplified threshold increasing in k (l < k <= k_hi)?
/// Reported, not asserted.
inline Json pendant_bound_monotonicity(std::size_t k_hi) {
    std::size_t steps = 0, increasing = 0;
    Json exceptions = Json::array();
    for (std::size_t l = 1; l < k_hi; ++l) {
        for (std::size_t k = l + 1; k < k_hi; ++k) {
            if (l > k * (k - 1) / 2) continue;
            ++steps;
            if (pendant_star_bound_raw(k + 1, l) > pendant_star_bound_raw(k, l)) {
                ++increasing;
            } else if (exceptions.size() < 10) {
                exceptions.push_back(Json::array({k, l}));
            }
        }
    }
    Json out;
    out["k_max"] = k_hi;
    out["steps"] = steps;
    out["increasing_steps"] = increasing;
    out["first_exceptions_k_l"] = std::move(exceptions);
    return out;
}

/// Constants of K_n glued to a path end, against direct computation.
inline Check check_clique_path(std::size_t n_hi) {
    Check c("clique_path_constants");
    for (std::size_t n = 2; n <= n_hi; ++n) {
        const auto [g, v] = make_clique_path(n);
        const GraphProfile p = profile(g);
        const CliquePathConstants k = clique_path_constants(n);
        c.record(p.kemeny == k.kemeny && p.moment(v) == k.moment && p.moment(v) - p.kemeny == k.moment_minus_kemeny,
                 [&] { return "n=" + std::to_string(n); });
    }
    return c;
}

/// Twin pendants in trees with n >= 4: the edge joining them is Braess.
inline Check check_twin_pendants(std::size_t n_hi) {
    Check c("twin_pendants_braess");
    for (std::size_t n = 4; n <= n_hi; ++n) {
        for (const Graph& t : tree_classes(n)) {
            for (Vertex v = 0; v < n; ++v) {
                std::vector<Vertex> leaves;
                for (Vertex u : t.neighbors(v)) {
                    if (t.degree(u) == 1) leaves.push_back(u);
                }
                if (leaves.size() < 2) continue;
                const Rational d = delta_kemeny_direct(t, {{leaves[0], leaves[1]}});
                c.record(d.sign() > 0, [&] { return describe(t, v); });
            }
        }
    }
    return c;
}

/// Scan results: nothing to add to K_4; the P_7 pair appears as Braess.
inline Check check_scan_examples() {
    Check c("braess_scan_examples");
    c.record(braess_scan(make_complete(4)).empty(), [] { return std::string("K_4 scan not empty"); });
    const auto reports = braess_scan(make_path(7), ScanConfig{2, 20}, "P_7");
    bool found = false, monotone = true, sorted = true;
    const EdgeSet witness = canonical_edge_set({{0, 2}, {4, 6}});
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].edge_set == witness) found = reports[i].is_braess;
        monotone = monotone && *reports[i].resistances_nonincreasing;
        if (i) sorted = sorted && reports[i - 1].delta_kemeny >= reports[i].delta_kemeny;
    }
    c.record(found, [] { return std::string("P_7 pair missing or not Braess"); });
    c.record(monotone, [] { return std::string("a resistance grew after adding edges"); });
    c.record(sorted, [] { return std::string("scan not sorted by delta"); });
    return c;
}

// ---------------------------------------------------------------------------
// Suites

struct VerifyConfig {
    std::size_t max_n = 5;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxVerifyN = 8;

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    Json notes = Json::object();

    [[nodiscard]] bool ok() const {
        for (const Check& c : checks) {
            if (!c.ok()) return false;
        }
        return true;
    }
};

inline Json suite_json(const SuiteReport& s) {
    Json j;
    j["suite"] = s.suite;
    j["ok"] = s.ok();
    Json arr = Json::array();
    for (const Check& c : s.checks) arr.push_back(check_json(c));
    j["checks"] = std::move(arr);
    j["notes"] = s.notes;
    return j;
}

namespace detail {

inline Rng suite_rng(const VerifyConfig& cfg, std::uint64_t salt) { return Rng(cfg.seed * 0x9E3779B97F4A7C15ULL + salt); }

inline void append(std::vector<Check>& out, std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
}

}  // namespace detail

inline SuiteReport run_closed_forms(const VerifyConfig& cfg) {
    const std::size_t n = cfg.max_n;
    SuiteReport r{"closed-forms", {}, Json::object()};
    r.checks.push_back(check_family_kemeny(2, 4 * n));
    r.checks.push_back(check_family_moments(2, 4 * n));
    r.checks.push_back(check_barbell_direct(n + 1, n));
    r.checks.push_back(check_barbell_corollaries(6 * n));
    const RootedCorpus corpus = rooted_class_corpus(std::min<std::size_t>(n, 5));
    r.checks.push_back(check_pendants(corpus, 3));
    detail::append(r.checks, check_triplets(connected_corpus(std::min(n, kMaxExhaustiveOrder)).graphs));
    r.checks.push_back(check_triplet_special_cases());
    r.checks.push_back(check_mesh_star(2 * n));
    r.notes["barbell_max_sweep"] = barbell_max_sweep(6 * n);
    return r;
}

inline SuiteReport run_separation(const VerifyConfig& cfg) {
    const std::size_t n = std::min<std::size_t>(cfg.max_n, 5);
    SuiteReport r{"separation", {}, Json::object()};
    detail::append(r.checks, check_separation_pairs(rooted_class_corpus(n)));
    Rng rng = detail::suite_rng(cfg, 2);
    detail::append(r.checks, check_random_chains(rng, 25, n));
    r.checks.push_back(check_star_of_parts(rng, 25, n));
    return r;
}

inline SuiteReport run_trees(const VerifyConfig& cfg) {
    const std::size_t n = cfg.max_n;
    SuiteReport r{"trees", {}, Json::object()};
    detail::append(r.checks, check_prufer(std::min<std::size_t>(n + 2, 7)));
    detail::append(r.checks, check_path_max(2, std::min<std::size_t>(n + 2, 8)));
    std::vector<Graph> trees;
    for (std::size_t k = 2; k <= std::min<std::size_t>(n + 1, 7); ++k) {
        for (Graph t : all_trees(k)) trees.push_back(std::move(t));
    }
    r.checks.push_back(check_oracle(trees, "hitting_oracle_trees"));
    Rng rng = detail::suite_rng(cfg, 3);
    r.checks.push_back(check_oracle(random_connected_graphs(rng, 50, 2, std::min<std::size_t>(2 * n + 2, 12)),
                                    "hitting_oracle_random"));
    r.checks.push_back(check_corpus_counts(std::min(n, kMaxExhaustiveOrder)));
    return r;
}

inline SuiteReport run_braess(const VerifyConfig& cfg) {
    const std::size_t n = std::min<std::size_t>(cfg.max_n, 5);
    SuiteReport r{"braess", {}, Json::object()};
    const RootedCorpus corpus = rooted_class_corpus(n);
    std::vector<Rational> table;
    check_separation_pairs(corpus, &table);
    detail::append(r.checks, check_kemdiff_sweep(corpus, table, 2, 101));
    r.checks.push_back(check_p7_witness());
    r.checks.push_back(check_pendant_star_bound(10));
    Rng rng = detail::suite_rng(cfg, 4);
    r.checks.push_back(check_pendant_star_random(rng, 200));
    r.checks.push_back(check_clique_path(cfg.max_n + 3));
    r.checks.push_back(check_twin_pendants(cfg.max_n + 2));
    r.checks.push_back(check_scan_examples());
    r.notes["pendant_bound_monotonicity"] = pendant_bound_monotonicity(30);
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"closed-forms", "separation", "trees", "braess", "all"};
    return names;
}

/// Runs one suite (or all) and returns the JSON document; `ok` is set to
/// whether every check passed.
inline Json run_verify(const std::string& suite, const VerifyConfig& cfg, bool& ok) {
    if (cfg.max_n < 2 || cfg.max_n > kMaxVerifyN) {
        throw CapExceeded("--max-n must be between 2 and " + std::to_string(kMaxVerifyN));
    }
    std::vector<SuiteReport> reports;
    const bool all = suite == "all";
    if (all || suite == "closed-forms") reports.push_back(run_closed_forms(cfg));
    if (all || suite == "separation") reports.push_back(run_separation(cfg));
    if (all || suite == "trees") reports.push_back(run_trees(cfg));
    if (all || suite == "braess") reports.push_back(run_braess(cfg));
    if (reports.empty()) throw GraphError("unknown suite: " + suite);

    ok = true;
    Json j;
    j["suite"] = suite;
    j["max_n"] = cfg.max_n;
    j["seed"] = cfg.seed;
    Json arr = Json::array();
    std::size_t checks = 0, failed = 0;
    for (const SuiteReport& s : reports) {
        ok = ok && s.ok();
        for (const Check& c : s.checks) {
            ++checks;
            if (!c.ok()) ++failed;
        }
        arr.push_back(suite_json(s));
    }
    j["ok"] = ok;
    j["checks"] = checks;
    j["failed_checks"] = failed;
    j["suites"] = std::move(arr);
    return j;
}

}  // namespace kemeny::verify
