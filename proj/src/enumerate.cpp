#include "ybx/enumerate.hpp"

#include "ybx/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ybx {

namespace {

bool admissible(const SolutionTable& s) {
    if (!check_idempotent(s)) return false;
    if (!check_nondegenerate(s).left) return false;
    return !braid_counterexample(s).has_value();
}

// decode one of the (n^2)^(n^2) total maps on X^2
SolutionTable decode_full_map(int n, long long code) {
    const int cells = n * n;
    SolutionTable s;
    s.n = n;
    s.r.resize(cells);
    for (int c = 0; c < cells; ++c) {
        int v = static_cast<int>(code % cells);
        code /= cells;
        s.r[c] = {v / n, v % n};
    }
    s.rebuild_actions();
    return s;
}

// decode (L, R): L is a tuple of permutations indexed into perms,
// R any map X^2 -> X
SolutionTable decode_structured(int n, const std::vector<std::vector<int>>& perms,
                                long long lcode, long long rcode) {
    SolutionTable s;
    s.n = n;
    s.r.resize(n * n);
    std::vector<const std::vector<int>*> L(n);
    for (int x = 0; x < n; ++x) {
        L[x] = &perms[lcode % perms.size()];
        lcode /= perms.size();
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int rx = static_cast<int>(rcode % n);
            rcode /= n;
            s.r[x * n + y] = {(*L[x])[y], rx};
        }
    s.rebuild_actions();
    return s;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> canonical_encoding(const SolutionTable& s) {
    auto perms = all_permutations(s.n);
    std::vector<int> best;
    for (const auto& p : perms) {
        std::vector<int> phi(s.n);
        for (int i = 0; i < s.n; ++i) phi[i] = p[i] + 1;
        auto enc = relabel_solution(s, phi).encoding();
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

std::vector<SolutionTable> finalize(std::vector<SolutionTable> found, bool dedup_iso) {
    std::sort(found.begin(), found.end(), [](const SolutionTable& a, const SolutionTable& b) {
        return a.encoding() < b.encoding();
    });
    if (!dedup_iso) return found;
    std::vector<SolutionTable> out;
    std::vector<std::vector<int>> seen;
    for (const auto& s : found) {
        auto canon = canonical_encoding(s);
        if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
            seen.push_back(canon);
            out.push_back(s);
        }
    }
    return out;
}

std::vector<SolutionTable> run(int n, bool dedup_iso, bool parallel) {
    std::vector<SolutionTable> found;
    std::mutex mtx;
    if (n == 2) {
        const int cells = n * n;
        long long total = 1;
        for (int i = 0; i < cells; ++i) total *= cells;
        parallel_for(total, [&](long long code) {
            SolutionTable s = decode_full_map(n, code);
            if (admissible(s)) {
                std::lock_guard<std::mutex> lock(mtx);
                found.push_back(std::move(s));
            }
        }, parallel);
    } else if (n == 3) {
        auto perms = all_permutations(n);
        long long lspace = 1, rspace = 1;
        for (int i = 0; i < n; ++i) lspace *= static_cast<long long>(perms.size());
        for (int i = 0; i < n * n; ++i) rspace *= n;
        parallel_for(lspace, [&](long long lcode) {
            std::vector<SolutionTable> local;
            for (long long rcode = 0; rcode < rspace; ++rcode) {
                SolutionTable s = decode_structured(n, perms, lcode, rcode);
                if (admissible(s)) local.push_back(std::move(s));
            }
            if (!local.empty()) {
                std::lock_guard<std::mutex> lock(mtx);
                for (auto& s : local) found.push_back(std::move(s));
            }
        }, parallel);
    } else {
        throw std::invalid_argument("enumerate: only n = 2 (full) and n = 3 (structured) supported");
    }
    return finalize(std::move(found), dedup_iso);
}

} // namespace

std::vector<SolutionTable> enumerate_idempotent_lnd_solutions(int n, bool dedup_iso,
                                                              bool parallel) {
    return run(n, dedup_iso, parallel);
}

std::vector<SolutionTable> enumerate_idempotent_lnd_solutions_serial(int n, bool dedup_iso) {
    return run(n, dedup_iso, false);
}

} // namespace ybx
