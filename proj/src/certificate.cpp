#include <satpat/certificate.hpp>

#include <charconv>
#include <sstream>

namespace satpat {

using std::string;
using std::string_view;
using std::vector;

string_view to_string(Role r) {
    switch (r) {
    case Role::avoids:
        return "avoids";
    case Role::vertical_witness:
        return "vertical-witness";
    case Role::horizontal_witness:
        return "horizontal-witness";
    case Role::witness:
        return "witness";
    case Role::explicit_witness:
        return "explicit-witness";
    case Role::saturating:
        return "saturating";
    }
    return "?";
}

std::optional<Role> parse_role(string_view name) {
    if (name == "avoids")
        return Role::avoids;
    if (name == "vertical" || name == "vertical-witness")
        return Role::vertical_witness;
    if (name == "horizontal" || name == "horizontal-witness")
        return Role::horizontal_witness;
    if (name == "witness" || name == "full")
        return Role::witness;
    if (name == "explicit" || name == "explicit-witness")
        return Role::explicit_witness;
    if (name == "saturating")
        return Role::saturating;
    return std::nullopt;
}

namespace {

string join(const vector<int> &xs) {
    string out;
    for (int x : xs) {
        out += ' ';
        out += std::to_string(x);
    }
    return out;
}

struct LineReader {
    vector<string_view> lines;
    std::size_t pos = 0;

    explicit LineReader(string_view text) {
        std::size_t start = 0;
        while (start < text.size()) {
            auto nl = text.find('\n', start);
            auto line = text.substr(start, nl == string_view::npos ? string_view::npos : nl - start);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines.push_back(line);
            if (nl == string_view::npos)
                break;
            start = nl + 1;
        }
    }

    string_view next(const char *what) {
        if (pos >= lines.size())
            throw MatrixError(string("certificate truncated before ") + what);
        return lines[pos++];
    }

    string_view keyed(string_view key) {
        auto line = next(string(key).c_str());
        if (!line.starts_with(key))
            throw MatrixError("certificate: expected '" + string(key) + "'");
        auto rest = line.substr(key.size());
        while (!rest.empty() && rest.front() == ' ')
            rest.remove_prefix(1);
        return rest;
    }

    Matrix01 matrix(const char *what) {
        auto header = next(what);
        if (!header.starts_with("#"))
            throw MatrixError(string("certificate: ") + what + " needs a '# rows cols' header");
        int rows = 0;
        {
            std::istringstream hs{string(header.substr(1))};
            int cols = 0;
            if (!(hs >> rows >> cols) || rows < 0)
                throw MatrixError(string("certificate: bad header for ") + what);
        }
        string text(header);
        text += '\n';
        for (int r = 0; r < rows; ++r) {
            text += next(what);
            text += '\n';
        }
        return parse_matrix(text);
    }
};

vector<int> parse_index_list(string_view s) {
    vector<int> out;
    std::istringstream in{string(s)};
    string tok;
    while (in >> tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw MatrixError("certificate: bad index '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

string serialize(const WitnessCertificate &c) {
    std::ostringstream os;
    os << "role: " << to_string(c.role) << '\n';
    os << "pattern:\n" << render_matrix_file(c.pattern.matrix());
    os << "matrix:\n" << render_matrix_file(c.matrix);
    os << "expandable-rows:" << join(c.expandable_rows) << '\n';
    os << "expandable-cols:" << join(c.expandable_cols) << '\n';
    return os.str();
}

WitnessCertificate parse_certificate(string_view text) {
    LineReader in(text);
    const auto role_name = in.keyed("role:");
    const auto role = parse_role(role_name);
    if (!role)
        throw MatrixError("certificate: unknown role '" + string(role_name) + "'");
    in.keyed("pattern:");
    Pattern pattern(in.matrix("pattern"));
    in.keyed("matrix:");
    Matrix01 matrix = in.matrix("matrix");
    auto rows = parse_index_list(in.keyed("expandable-rows:"));
    auto cols = parse_index_list(in.keyed("expandable-cols:"));
    return {std::move(matrix), std::move(pattern), *role, std::move(rows), std::move(cols)};
}

bool looks_like_certificate(string_view text) { return text.starts_with("role:"); }

} // namespace satpat
