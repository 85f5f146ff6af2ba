#include <satpat/sat_oracle.hpp>

#include <satpat/containment.hpp>

#include <optional>
#include <string>
#include <vector>

namespace satpat {

namespace {

void guard(int m, int n) {
    if (m < 1 || n < 1)
        throw OracleError("oracle: dimensions must be positive");
    if (m * n > oracle_cell_limit)
        throw OracleError("oracle: " + std::to_string(m) + "x" + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(oracle_cell_limit) + " cells");
}

Matrix01 all_ones(int m, int n) {
    std::vector<Entry> es;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c)
            es.push_back({r, c});
    return Matrix01(m, n, std::move(es));
}

bool fits(const Pattern &p, int m, int n) { return p.rows() <= m && p.cols() <= n; }

struct Search {
    const Matcher &matcher;
    int m;
    int n;
    bool minimise;
    HostIndex host;
    int best = -1;
    std::optional<Matrix01> best_matrix;

    Search(const Matcher &mt, int rows, int cols, bool min)
        : matcher(mt), m(rows), n(cols), minimise(min), host(rows, cols) {}

    Entry cell(int i) const { return {i / n + 1, i % n + 1}; }

    bool maximal() const {
        for (int r = 1; r <= m; ++r)
            for (int c = 1; c <= n; ++c)
                if (!host.at(r, c) && !matcher.creates_occurrence(host, {r, c}))
                    return false;
        return true;
    }

    void leaf() {
        const int w = static_cast<int>(host.weight());
        if (minimise) {
            if ((best < 0 || w < best) && maximal()) {
                best = w;
                best_matrix = host.to_matrix();
            }
        } else if (w > best) {
            best = w;
            best_matrix = host.to_matrix();
        }
    }

    void try_one(int i) {
        const Entry e = cell(i);
        if (matcher.creates_occurrence(host, e))
            return;
        host.add(e);
        run(i + 1);
        host.remove(e);
    }

    void run(int i) {
        const int w = static_cast<int>(host.weight());
        if (minimise) {
            if (best >= 0 && w >= best)
                return;
        } else if (w + (m * n - i) <= best) {
            return;
        }
        if (i == m * n) {
            leaf();
            return;
        }
        if (minimise) {
            run(i + 1);
            try_one(i);
        } else {
            try_one(i);
            run(i + 1);
        }
    }
};

OracleResult solve(const Pattern &p, int m, int n, bool minimise) {
    guard(m, n);
    if (!fits(p, m, n)) {
        // Nothing can contain p, so the only saturating and the heaviest
        // avoiding matrix is all ones.
        return {m * n, all_ones(m, n)};
    }
    const Matcher matcher(p);
    Search s(matcher, m, n, minimise);
    s.run(0);
    if (!s.best_matrix)
        throw OracleError("oracle: search finished without a result");
    return {s.best, std::move(*s.best_matrix)};
}

} // namespace

OracleResult sat_bruteforce(const Pattern &p, int m, int n) { return solve(p, m, n, true); }

OracleResult ex_bruteforce(const Pattern &p, int m, int n) { return solve(p, m, n, false); }

} // namespace satpat
