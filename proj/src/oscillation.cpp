#include <satpat/oscillation.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace satpat {

using std::optional;
using std::span;
using std::vector;

std::string_view to_string(SequenceKind k) {
    switch (k) {
    case SequenceKind::oscillation:
        return "oscillation";
    case SequenceKind::spanning_oscillation:
        return "spanning-oscillation";
    case SequenceKind::traversal:
        return "traversal";
    case SequenceKind::tall_traversal:
        return "tall-traversal";
    }
    return "?";
}

std::string format_sequence(span<const Entry> seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            os << ' ';
        os << seq[i];
    }
    return os.str();
}

vector<Entry> parse_sequence(std::string_view text) {
    vector<Entry> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw OscillationError(std::string("malformed sequence: expected '") + c + "'");
        ++i;
    };
    auto number = [&] {
        skip_ws();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc())
            throw OscillationError("malformed sequence: expected a number");
        i = static_cast<std::size_t>(ptr - text.data());
        return v;
    };
    skip_ws();
    while (i < text.size()) {
        expect('(');
        const int r = number();
        expect(',');
        const int c = number();
        expect(')');
        out.push_back({r, c});
        skip_ws();
    }
    return out;
}

namespace {

bool adjacent(const Entry &x, const Entry &y) {
    return (x.below(y) && x.left_of(y)) || (y.below(x) && y.left_of(x));
}

void check_members(const PermutationMatrix &p, span<const Entry> seq) {
    std::set<Entry> seen;
    for (const auto &e : seq) {
        if (!p.has(e)) {
            std::ostringstream msg;
            msg << e << " is not a 1-entry of the host";
            throw OscillationError(msg.str());
        }
        if (!seen.insert(e).second) {
            std::ostringstream msg;
            msg << e << " appears twice";
            throw OscillationError(msg.str());
        }
    }
}

bool induced_path(span<const Entry> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (adjacent(seq[i], seq[j]) != (j == i + 1))
                return false;
    return true;
}

bool spanning_ends(const PermutationMatrix &p, span<const Entry> seq) {
    const auto m = seq.size();
    if (m < 4)
        return false;
    const auto ex = extremes(p);
    auto same_pair = [](const Entry &a, const Entry &b, const Entry &u, const Entry &v) {
        return (a == u && b == v) || (a == v && b == u);
    };
    return same_pair(seq[0], seq[1], ex.ell, ex.t) && same_pair(seq[m - 2], seq[m - 1], ex.b, ex.r);
}

// 1-based accessor.
const Entry &X(span<const Entry> seq, std::size_t i) { return seq[i - 1]; }

bool traversal_props(const PermutationMatrix &p, span<const Entry> seq) {
    const std::size_t m = seq.size();
    if (m < 4 || m % 2 != 0)
        return false;
    const auto ex = extremes(p);
    if (X(seq, 1) != ex.ell || X(seq, 2) != ex.t || X(seq, m - 1) != ex.b || X(seq, m) != ex.r)
        return false;

    // x1 <h x3 <h x2 <h x5 <h x4 <h ... <h x_{m-1} <h x_{m-2} <h x_m
    vector<std::size_t> hchain{1};
    for (std::size_t s = 3; s + 1 <= m; s += 2) {
        hchain.push_back(s);
        hchain.push_back(s - 1);
    }
    hchain.push_back(m);
    for (std::size_t a = 0; a + 1 < hchain.size(); ++a)
        if (!X(seq, hchain[a]).left_of(X(seq, hchain[a + 1])))
            return false;

    // l <v x4 <v x6 <v ... <v x_m
    vector<Entry> upper{ex.ell};
    for (std::size_t s = 4; s <= m; s += 2)
        upper.push_back(X(seq, s));
    for (std::size_t a = 0; a + 1 < upper.size(); ++a)
        if (!upper[a].above(upper[a + 1]))
            return false;

    // x3 <v x5 <v ... <v x_{m-3} <v r
    vector<Entry> lower;
    for (std::size_t s = 3; s + 3 <= m; s += 2)
        lower.push_back(X(seq, s));
    lower.push_back(ex.r);
    for (std::size_t a = 0; a + 1 < lower.size(); ++a)
        if (!lower[a].above(lower[a + 1]))
            return false;

    for (std::size_t s = 1; s < m; s += 2)
        if (!X(seq, s).below(X(seq, s + 1)))
            return false;
    return true;
}

// The tall emptiness conditions at upper position i.
bool tall_at(const PermutationMatrix &p, span<const Entry> seq, std::size_t i) {
    const Entry &xi = X(seq, i);
    const Entry &xn = X(seq, i + 1);
    for (const auto &y : p.entries()) {
        if (y.below(xn) && y.left_of(xi))
            return false;
        if (y.above(xi) && y.right_of(xn))
            return false;
    }
    return true;
}

bool tall_traversal_conditions(const PermutationMatrix &p, span<const Entry> seq) {
    for (std::size_t i = 2; i + 2 <= seq.size(); i += 2)
        if (!tall_at(p, seq, i))
            return false;
    return true;
}

// Upper positions of a spanning oscillation: even when it starts with l,
// odd when it starts with t.
bool upper_index(const PermutationMatrix &p, span<const Entry> seq, std::size_t i) {
    const bool starts_with_ell = seq.front() == extremes(p).ell;
    return starts_with_ell ? i % 2 == 0 : i % 2 == 1;
}

bool tall_oscillation_conditions(const PermutationMatrix &p, span<const Entry> seq) {
    for (std::size_t i = 2; i + 2 <= seq.size(); ++i)
        if (upper_index(p, seq, i) && !tall_at(p, seq, i))
            return false;
    return true;
}

} // namespace

bool validate(const PermutationMatrix &p, span<const Entry> seq, SequenceKind kind) {
    check_members(p, seq);
    switch (kind) {
    case SequenceKind::oscillation:
        return !seq.empty() && induced_path(seq);
    case SequenceKind::spanning_oscillation:
        return induced_path(seq) && spanning_ends(p, seq);
    case SequenceKind::traversal:
        return traversal_props(p, seq);
    case SequenceKind::tall_traversal:
        return traversal_props(p, seq) && tall_traversal_conditions(p, seq);
    }
    return false;
}

bool is_tall(const PermutationMatrix &p, span<const Entry> seq) {
    if (validate(p, seq, SequenceKind::traversal))
        return tall_traversal_conditions(p, seq);
    if (validate(p, seq, SequenceKind::spanning_oscillation))
        return tall_oscillation_conditions(p, seq);
    throw OscillationError("tallness needs a spanning oscillation or a traversal");
}

vector<Entry> transform_sequence(span<const Entry> seq, int k, Transform t) {
    vector<Entry> out;
    out.reserve(seq.size());
    for (const auto &e : seq)
        out.push_back(transform_entry(e, k, k, t));
    return out;
}

bool is_wide(const PermutationMatrix &p, span<const Entry> seq) {
    const auto tp = transform(p, Transform::trans);
    const auto ts = transform_sequence(seq, p.size(), Transform::trans);
    return is_tall(tp, ts);
}

// ---------------------------------------------------------------------------

namespace {

struct PathSearch {
    const PermutationMatrix &p;
    vector<Entry> verts;  // (row, col) order
    Extremes ex;
    std::size_t target = 0;
    vector<Entry> path;

    explicit PathSearch(const PermutationMatrix &host) : p(host), verts(host.entries()), ex(extremes(host)) {}

    bool is_end(const Entry &e) const { return e == ex.b || e == ex.r; }

    bool extend() {
        const std::size_t m = path.size();
        if (m == target)
            return true;
        const Entry last = path.back();
        for (const auto &v : verts) {
            if (!adjacent(last, v))
                continue;
            // Only the final two positions may hold b or r.
            if (is_end(v) != (m + 2 >= target))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < m && ok; ++i)
                if (path[i] == v || adjacent(path[i], v))
                    ok = false;
            if (!ok || v == last)
                continue;
            path.push_back(v);
            if (extend())
                return true;
            path.pop_back();
        }
        return false;
    }

    optional<vector<Entry>> run(std::size_t length) {
        target = length;
        vector<Entry> starts{ex.ell, ex.t};
        std::sort(starts.begin(), starts.end());
        for (std::size_t a = 0; a < 2; ++a) {
            path = {starts[a], starts[1 - a]};
            if (is_end(path[0]) || is_end(path[1]))
                continue;
            if (extend())
                return path;
        }
        return std::nullopt;
    }
};

} // namespace

optional<EntrySequence> find_min_spanning_oscillation(const PermutationMatrix &p) {
    const auto ex = extremes(p);
    if (ex.ell == ex.t || ex.b == ex.r)
        return std::nullopt;
    PathSearch search(p);
    for (int len = 4; len <= p.size(); ++len)
        if (auto path = search.run(static_cast<std::size_t>(len)))
            return EntrySequence{std::move(*path), SequenceKind::spanning_oscillation};
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// One repair step at the first violated upper position, or nullopt if tall.
optional<vector<Entry>> repair_once(const PermutationMatrix &p, const vector<Entry> &x) {
    const std::size_t m = x.size();
    for (std::size_t i = 2; i + 2 <= m; ++i) {
        if (!upper_index(p, x, i))
            continue;
        const Entry xi = X(x, i);
        const Entry xn = X(x, i + 1);

        // (i): bottommost entry below x_{i+1} and left of x_i.
        optional<Entry> y;
        for (const auto &e : p.entries())
            if (e.below(xn) && e.left_of(xi) && (!y || e.below(*y)))
                y = e;
        if (y) {
            std::size_t j = 0, k = 0;
            for (std::size_t a = 1; a <= m && j == 0; ++a)
                if (X(x, a).right_of(*y))
                    j = a;
            for (std::size_t a = m; a >= 1 && k == 0; --a)
                if (X(x, a).above(*y))
                    k = a;
            if (j == 0 || k == 0 || j >= k)
                throw OscillationError("tall repair lost its splice points");
            vector<Entry> out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
            out.push_back(*y);
            out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(k - 1), x.end());
            return out;
        }

        // (ii): topmost entry above x_i and right of x_{i+1}; mirror of (i).
        y.reset();
        for (const auto &e : p.entries())
            if (e.above(xi) && e.right_of(xn) && (!y || e.above(*y)))
                y = e;
        if (y) {
            std::size_t j = 0, k = 0;
            for (std::size_t a = 1; a <= m && j == 0; ++a)
                if (X(x, a).below(*y))
                    j = a;
            for (std::size_t a = m; a >= 1 && k == 0; --a)
                if (X(x, a).left_of(*y))
                    k = a;
            if (j == 0 || k == 0 || j >= k)
                throw OscillationError("tall repair lost its splice points");
            vector<Entry> out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
            out.push_back(*y);
            out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(k - 1), x.end());
            return out;
        }
    }
    return std::nullopt;
}

vector<Entry> straighten_tall(const PermutationMatrix &p, vector<Entry> x) {
    const std::size_t m = x.size();
    const std::size_t limit = static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(p.size()) * m + 16;
    for (std::size_t iter = 0; iter < limit; ++iter) {
        auto next = repair_once(p, x);
        if (!next)
            return x;
        if (next->size() != m)
            throw OscillationError("spanning oscillation is not of minimum length");
        if (!validate(p, *next, SequenceKind::spanning_oscillation))
            throw OscillationError("tall repair produced an invalid oscillation");
        x = std::move(*next);
    }
    throw OscillationError("tall repair did not converge");
}

} // namespace

EntrySequence straighten(const PermutationMatrix &p, span<const Entry> seq, Orientation o) {
    if (!validate(p, seq, SequenceKind::spanning_oscillation))
        throw OscillationError("not a spanning oscillation");
    const auto shortest = find_min_spanning_oscillation(p);
    if (!shortest || shortest->size() != seq.size())
        throw OscillationError("spanning oscillation is not of minimum length");

    vector<Entry> x(seq.begin(), seq.end());
    if (o == Orientation::tall)
        return {straighten_tall(p, std::move(x)), SequenceKind::spanning_oscillation};

    const auto tp = transform(p, Transform::trans);
    auto tx = straighten_tall(tp, transform_sequence(x, p.size(), Transform::trans));
    return {transform_sequence(tx, p.size(), Transform::trans), SequenceKind::spanning_oscillation};
}

// ---------------------------------------------------------------------------

namespace {

vector<Entry> inserted(span<const Entry> x, std::size_t s, const Entry &y1, const Entry &y2) {
    vector<Entry> out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(s));
    out.push_back(y1);
    out.push_back(y2);
    out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(s), x.end());
    return out;
}

optional<Extension> find_extension(const PermutationMatrix &p, span<const Entry> x) {
    const std::size_t m = x.size();
    const std::set<Entry> used(x.begin(), x.end());
    vector<Entry> free;
    for (const auto &e : p.entries())
        if (!used.count(e))
            free.push_back(e);
    for (std::size_t s = 5; s + 5 <= m; s += 2)
        for (const auto &y1 : free)
            for (const auto &y2 : free)
                if (y1 != y2 && traversal_props(p, inserted(x, s, y1, y2)))
                    return Extension{static_cast<int>(s), y1, y2};
    return std::nullopt;
}

} // namespace

optional<Extension> is_extendable(const PermutationMatrix &p, span<const Entry> seq) {
    if (!validate(p, seq, SequenceKind::tall_traversal))
        throw OscillationError("not a tall traversal");
    return find_extension(p, seq);
}

EntrySequence extend_to_nonextendable(const PermutationMatrix &p, span<const Entry> seq) {
    if (!validate(p, seq, SequenceKind::tall_traversal))
        throw OscillationError("not a tall traversal");
    vector<Entry> x(seq.begin(), seq.end());
    while (auto ext = find_extension(p, x)) {
        // Widest replacement pair: y2' left of y1', y1' not below y1, y2' not
        // above y2, maximal vertical distance; ties go to the first pair in
        // (row, col) order.
        optional<std::pair<Entry, Entry>> best;
        int best_dv = -1;
        for (const auto &a : p.entries()) {
            if (a.below(ext->y1))
                continue;
            for (const auto &b : p.entries()) {
                if (!b.left_of(a) || b.above(ext->y2))
                    continue;
                const int dv = vertical_distance(a, b);
                if (dv > best_dv) {
                    best_dv = dv;
                    best = {a, b};
                }
            }
        }
        if (!best)
            throw OscillationError("extension lost its witness pair");
        auto next = inserted(x, static_cast<std::size_t>(ext->s), best->first, best->second);
        const bool distinct = std::set<Entry>(next.begin(), next.end()).size() == next.size();
        if (!distinct || !traversal_props(p, next) || !tall_traversal_conditions(p, next)) {
            throw OscillationError("tall insertion produced an invalid traversal: " + format_sequence(next));
        }
        x = std::move(next);
    }
    return {std::move(x), SequenceKind::tall_traversal};
}

} // namespace satpat
