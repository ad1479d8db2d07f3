#pragma once

// Brute-force and sampling oracles for code parameters.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/families.hpp"
#include "lrc/lrcode.hpp"
#include "lrc/polyalg.hpp"

namespace lrc::oracles {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        result *= base;
    }
    return result;
}

/// Weight evaluations exact_distance would perform.
inline std::uint64_t enumeration_cost(const LinearCode& code, bool dedup = true) {
    const std::uint64_t q = code.field->q();
    const std::uint64_t all = saturating_pow(q, static_cast<std::uint64_t>(code.k));
    if (all == std::numeric_limits<std::uint64_t>::max()) return all;
    return dedup ? (all - 1) / (q - 1) : all - 1;
}

inline int weight(std::span<const Elem> w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](Elem e) { return e != 0; }));
}

namespace detail {

struct Enumerator {
    const Field& f;
    std::size_t n;
    std::size_t k;
    // scaled[i][a] = a * row_i
    std::vector<std::vector<std::vector<Elem>>> scaled;
    std::vector<std::vector<Elem>> partial;
    int best = std::numeric_limits<int>::max();

    Enumerator(const Matrix& g)
        : f(*g.field()), n(g.cols()), k(g.rows()), scaled(g.rows()), partial(g.rows() + 1, std::vector<Elem>(g.cols(), 0)) {
        for (std::size_t i = 0; i < k; ++i) {
            scaled[i].resize(f.q());
            for (Elem a = 0; a < f.q(); ++a) {
                scaled[i][a].resize(n);
                for (std::size_t j = 0; j < n; ++j) scaled[i][a][j] = f.mul(a, g(i, j));
            }
        }
    }

    void combine(std::size_t level, Elem a) {
        const auto& src = partial[level];
        auto& dst = partial[level + 1];
        const auto& row = scaled[level][a];
        for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(src[j], row[j]);
    }

    // Messages m_level..m_{k-1} free; `nonzero` tells whether an earlier entry is nonzero.
    void walk(std::size_t level, bool nonzero) {
        if (level == k) {
            if (!nonzero) return;
            const int w = weight(partial[k]);
            if (w < best) best = w;
            return;
        }
        for (Elem a = 0; a < f.q(); ++a) {
            combine(level, a);
            walk(level + 1, nonzero || a != 0);
        }
    }
};

}  // namespace detail

/// Minimum weight over all nonzero codewords. With `dedup` only messages
/// whose first nonzero entry is 1 are visited. Throws BudgetExceeded when
/// the number of weight evaluations would exceed `budget`.
inline int exact_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget, bool dedup = true) {
    if (code.k == 0) throw Error(Errc::PreconditionViolation, "zero code has no minimum distance");
    const std::uint64_t cost = enumeration_cost(code, dedup);
    if (cost > budget)
        throw Error(Errc::BudgetExceeded, std::to_string(cost) + " weight evaluations needed, budget " +
                                              std::to_string(budget));
    detail::Enumerator e(code.generator);
    if (!dedup) {
        e.walk(0, false);
        return e.best;
    }
    for (std::size_t lead = 0; lead < e.k; ++lead) {
        // Entries before `lead` are zero; partial[lead] stays the zero vector.
        std::fill(e.partial[lead].begin(), e.partial[lead].end(), 0);
        e.combine(lead, 1);
        e.walk(lead + 1, true);
    }
    return e.best;
}

inline std::vector<Elem> random_message(const Field& f, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    std::vector<Elem> m(k);
    do {
        for (auto& v : m) v = pick(rng);
    } while (std::all_of(m.begin(), m.end(), [](Elem v) { return v == 0; }));
    return m;
}

/// Minimum weight over the generator rows and `samples` seeded random
/// nonzero codewords: an upper bound on d.
inline int sampled_distance_upper(const LinearCode& code, std::size_t samples, std::uint64_t seed = 0) {
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < code.generator.rows(); ++i) best = std::min(best, weight(code.generator.row(i)));
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto msg = random_message(*code.field, code.generator.rows(), rng);
        best = std::min(best, weight(code.encode(msg)));
    }
    return best;
}

/// Recovery groups {i} + J_i, each listed once, smallest coordinate first.
inline std::vector<std::vector<std::size_t>> recovery_groups(const LinearCode& code) {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<bool> seen(code.n, false);
    for (std::size_t i = 0; i < static_cast<std::size_t>(code.n); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> g{i};
        g.insert(g.end(), code.recovery_sets[i].begin(), code.recovery_sets[i].end());
        std::sort(g.begin(), g.end());
        for (auto c : g)
            if (c < seen.size()) seen[c] = true;
        groups.push_back(std::move(g));
    }
    return groups;
}

namespace detail {

/// Codewords vanishing on `zeros`, tried until one has exactly `target` nonzeros.
inline std::optional<std::vector<Elem>> search_vanishing(const LinearCode& code, const std::vector<std::size_t>& zeros,
                                                         int target, std::mt19937_64& rng, int tries) {
    const Field& f = *code.field;
    Matrix restricted(code.field, zeros.size(), code.generator.rows());
    for (std::size_t z = 0; z < zeros.size(); ++z)
        for (std::size_t i = 0; i < code.generator.rows(); ++i) restricted(z, i) = code.generator(i, zeros[z]);
    const auto kernel = null_space(restricted);
    if (kernel.empty()) return std::nullopt;
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    for (int attempt = 0; attempt < tries + static_cast<int>(kernel.size()); ++attempt) {
        std::vector<Elem> msg(code.generator.rows(), 0);
        if (attempt < static_cast<int>(kernel.size())) {
            msg = kernel[attempt];
        } else {
            for (const auto& v : kernel) {
                const Elem c = pick(rng);
                for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = f.add(msg[i], f.mul(c, v[i]));
            }
        }
        auto word = code.encode(msg);
        if (weight(word) == target) return word;
    }
    return std::nullopt;
}

}  // namespace detail

/// Looks for a codeword of weight exactly `target`. Structured candidates
/// come first: words vanishing on whole recovery groups (the a_0(t) with
/// roots at the fiber coordinates) and words vanishing on whole groups plus
/// r - 1 points of every other group (a hyperplane through r - 1 points).
/// Then generator rows, then seeded sampling. nullopt means nothing was
/// found, not that no such word exists.
inline std::optional<std::vector<Elem>> min_weight_witness(const LinearCode& code, int target,
                                                           std::uint64_t seed = 0, std::size_t samples = 20000) {
    if (target < 1 || target > code.n || code.k == 0) return std::nullopt;
    std::mt19937_64 rng(seed);
    const auto groups = recovery_groups(code);
    const int b = static_cast<int>(groups.size());
    const int r = code.r;

    auto try_zero_groups = [&](int zero_groups, int extra_per_group) -> std::optional<std::vector<Elem>> {
        if (zero_groups < 0 || zero_groups > b) return std::nullopt;
        // Zero the last groups first, then the first ones.
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<std::size_t> zeros;
            for (int gi = 0; gi < b; ++gi) {
                const bool whole = variant == 0 ? gi >= b - zero_groups : gi < zero_groups;
                const auto& g = groups[gi];
                const std::size_t count = whole ? g.size() : std::min<std::size_t>(extra_per_group, g.size());
                zeros.insert(zeros.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(count));
            }
            if (auto w = detail::search_vanishing(code, zeros, target, rng, 200)) return w;
        }
        return std::nullopt;
    };

    if (target % (r + 1) == 0)
        if (auto w = try_zero_groups(b - target / (r + 1), 0)) return w;
    if (target % 2 == 0 && r >= 2)
        if (auto w = try_zero_groups(b - target / 2, r - 1)) return w;

    for (std::size_t i = 0; i < code.generator.rows(); ++i)
        if (weight(code.generator.row(i)) == target) {
            const auto row = code.generator.row(i);
            return std::vector<Elem>(row.begin(), row.end());
        }
    for (std::size_t s = 0; s < samples; ++s) {
        auto word = code.encode(random_message(*code.field, code.generator.rows(), rng));
        if (weight(word) == target) return word;
    }
    return std::nullopt;
}

/// True iff `word` lies in the row space of the generator.
inline bool in_code(const LinearCode& code, std::span<const Elem> word) {
    Matrix single(code.field, 1, word.size());
    std::copy(word.begin(), word.end(), single.row(0).begin());
    return Matrix::stack(code.generator, single).rank() == code.generator.rank();
}

struct RecoveryFailure {
    std::size_t coordinate = 0;
    /// Generator row index, or k + sample index for random codewords.
    std::size_t word = 0;
    Elem expected = 0;
    Elem recovered = 0;
};

struct RecoveryReport {
    bool partition_ok = true;
    std::string partition_issue;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    std::optional<RecoveryFailure> first_failure;

    bool ok() const { return partition_ok && failure_count == 0; }
};

/// Checks the partition structure of the recovery sets and c_i = sum lambda_j c_{J_i[j]}
/// on every generator row and on `random_words` seeded random codewords.
inline RecoveryReport recovery_exhaustive(const LinearCode& code, std::size_t random_words = 100, std::uint64_t seed = 0) {
    RecoveryReport rep;
    const std::size_t n = code.n;
    auto flag = [&](std::string what) {
        if (rep.partition_ok) rep.partition_issue = std::move(what);
        rep.partition_ok = false;
    };
    if (code.recovery_sets.size() != n || code.recovery_weights.size() != n) {
        flag("recovery tables do not have n entries");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& J = code.recovery_sets[i];
        if (J.size() != static_cast<std::size_t>(code.r) || code.recovery_weights[i].size() != J.size()) {
            flag("coordinate " + std::to_string(i) + " does not have r recovery entries");
            continue;
        }
        std::vector<std::size_t> group{i};
        group.insert(group.end(), J.begin(), J.end());
        std::sort(group.begin(), group.end());
        if (std::adjacent_find(group.begin(), group.end()) != group.end() || group.back() >= n) {
            flag("recovery set of coordinate " + std::to_string(i) + " is malformed");
            continue;
        }
        for (auto j : J) {
            std::vector<std::size_t> other{j};
            other.insert(other.end(), code.recovery_sets[j].begin(), code.recovery_sets[j].end());
            std::sort(other.begin(), other.end());
            if (other != group) flag("groups of coordinates " + std::to_string(i) + " and " + std::to_string(j) + " differ");
        }
    }
    if (!rep.partition_ok) return rep;

    auto check_word = [&](std::span<const Elem> word, std::size_t index) {
        for (std::size_t i = 0; i < n; ++i) {
            ++rep.checks;
            const Elem got = recover_symbol(code, word, i);
            if (got != word[i]) {
                ++rep.failure_count;
                if (!rep.first_failure) rep.first_failure = RecoveryFailure{i, index, word[i], got};
            }
        }
    };
    for (std::size_t row = 0; row < code.generator.rows(); ++row) check_word(code.generator.row(row), row);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < random_words && code.generator.rows() > 0; ++s) {
        const auto word = code.encode(random_message(*code.field, code.generator.rows(), rng));
        check_word(word, code.generator.rows() + s);
    }
    return rep;
}

struct ScanEntry {
    int r = 0, b = 0, M = 0, N = 0;
    int d = 0;
    /// "delta=1,r=3" or "delta=0,b=N+1"; empty when unclassified.
    std::string pattern;
};

struct ScanResult {
    std::size_t tuples = 0;
    std::vector<ScanEntry> marked;
    /// Tuples where "bounds meet" and "matches a known pattern" disagree.
    std::vector<ScanEntry> mismatches;
};

/// Baseline tuples 0 <= N <= M < b where the distance bounds coincide,
/// checked against the two known patterns: M - N = 1, r = 3, M = b - 1
/// (d = 4) and M = N = b - 1 (d = 2).
inline ScanResult optimality_scan(int r_lo, int r_hi, int b_lo, int b_hi, bool throw_on_mismatch = true) {
    ScanResult res;
    for (int r = r_lo; r <= r_hi; ++r)
        for (int b = b_lo; b <= b_hi; ++b)
            for (int M = 0; M < b; ++M)
                for (int N = 0; N <= M; ++N) {
                    ++res.tuples;
                    const auto p = families::predict_baseline(r, b, M, N);
                    const bool meet = p.d_lower == p.d_upper;
                    std::string pattern;
                    if (M - N == 1 && r == 3 && M == b - 1) pattern = "delta=1,r=3";
                    if (M == N && M == b - 1) pattern = "delta=0,b=N+1";
                    ScanEntry e{r, b, M, N, p.d_lower, pattern};
                    if (meet) res.marked.push_back(e);
                    if (meet != !pattern.empty()) res.mismatches.push_back(e);
                }
    if (throw_on_mismatch && !res.mismatches.empty()) {
        const auto& e = res.mismatches.front();
        throw Error(Errc::ClassificationMismatch, std::to_string(res.mismatches.size()) + " tuples disagree, first (r, b, M, N) = (" +
                                                      std::to_string(e.r) + ", " + std::to_string(e.b) + ", " +
                                                      std::to_string(e.M) + ", " + std::to_string(e.N) + ")");
    }
    return res;
}

}  // namespace lrc::oracles
