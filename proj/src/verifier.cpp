#include <satpat/verifier.hpp>

#include <sstream>

namespace satpat {

namespace {

std::string describe(const Embedding &e) {
    std::ostringstream os;
    os << "contains the pattern at";
    for (const auto &x : e.image)
        os << ' ' << x;
    return os.str();
}

// First empty, expandable line along `axis`, or 0.
int first_expandable(const Matrix01 &m, const Matcher &matcher, const HostIndex &host, Axis axis) {
    const int length = axis == Axis::row ? m.cols() : m.rows();
    const auto empties = axis == Axis::row ? m.empty_rows() : m.empty_cols();
    for (int line : empties) {
        bool all = true;
        for (int x = 1; x <= length && all; ++x) {
            const Entry cell = axis == Axis::row ? Entry{line, x} : Entry{x, line};
            all = matcher.creates_occurrence(host, cell);
        }
        if (all)
            return line;
    }
    return 0;
}

} // namespace

bool check_expandable(const Matrix01 &m, const Pattern &p, Axis axis, int index) {
    const int lines = axis == Axis::row ? m.rows() : m.cols();
    if (index < 1 || index > lines)
        throw MatrixError((axis == Axis::row ? "row " : "column ") + std::to_string(index) + " out of range");
    if (axis == Axis::row ? !m.row_empty(index) : !m.col_empty(index))
        return false;
    const Matcher matcher(p);
    const HostIndex host(m);
    if (matcher.find(host))
        return true;
    const int length = axis == Axis::row ? m.cols() : m.rows();
    for (int x = 1; x <= length; ++x) {
        const Entry cell = axis == Axis::row ? Entry{index, x} : Entry{x, index};
        if (!matcher.creates_occurrence(host, cell))
            return false;
    }
    return true;
}

std::vector<int> expandable_lines(const Matrix01 &m, const Pattern &p, Axis axis) {
    const Matcher matcher(p);
    const HostIndex host(m);
    std::vector<int> out;
    if (matcher.find(host))
        return out;
    const int length = axis == Axis::row ? m.cols() : m.rows();
    for (int line : axis == Axis::row ? m.empty_rows() : m.empty_cols()) {
        bool all = true;
        for (int x = 1; x <= length && all; ++x)
            all = matcher.creates_occurrence(host, axis == Axis::row ? Entry{line, x} : Entry{x, line});
        if (all)
            out.push_back(line);
    }
    return out;
}

CertifyResult certify(const Matrix01 &m, const Pattern &p, Role claim) {
    const Matcher matcher(p);
    const HostIndex host(m);
    if (auto e = matcher.find(host))
        return {false, describe(*e)};

    switch (claim) {
    case Role::avoids:
        return {true, {}};
    case Role::vertical_witness:
        if (first_expandable(m, matcher, host, Axis::row) == 0)
            return {false, "no expandable row"};
        return {true, {}};
    case Role::horizontal_witness:
        if (first_expandable(m, matcher, host, Axis::col) == 0)
            return {false, "no expandable column"};
        return {true, {}};
    case Role::witness:
        if (first_expandable(m, matcher, host, Axis::row) == 0)
            return {false, "no expandable row"};
        if (first_expandable(m, matcher, host, Axis::col) == 0)
            return {false, "no expandable column"};
        return {true, {}};
    case Role::saturating:
    case Role::explicit_witness:
        for (int r = 1; r <= m.rows(); ++r)
            for (int c = 1; c <= m.cols(); ++c)
                if (!m.at(r, c) && !matcher.creates_occurrence(host, {r, c})) {
                    std::ostringstream os;
                    os << "adding " << Entry{r, c} << " creates no occurrence";
                    return {false, os.str()};
                }
        if (claim == Role::explicit_witness) {
            if (m.empty_rows().empty())
                return {false, "no empty row"};
            if (m.empty_cols().empty())
                return {false, "no empty column"};
        }
        return {true, {}};
    }
    return {false, "unknown claim"};
}

CertifyResult certify(const WitnessCertificate &c) {
    auto verdict = certify(c.matrix, c.pattern, c.role);
    if (!verdict)
        return verdict;
    for (int r : c.expandable_rows)
        if (r < 1 || r > c.matrix.rows() || !check_expandable(c.matrix, c.pattern, Axis::row, r))
            return {false, "listed row " + std::to_string(r) + " is not expandable"};
    for (int col : c.expandable_cols)
        if (col < 1 || col > c.matrix.cols() || !check_expandable(c.matrix, c.pattern, Axis::col, col))
            return {false, "listed column " + std::to_string(col) + " is not expandable"};
    return verdict;
}

} // namespace satpat
