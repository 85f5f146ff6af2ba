#include <satpat/cli.hpp>

#include <satpat/certificate.hpp>
#include <satpat/containment.hpp>
#include <satpat/oscillation.hpp>
#include <satpat/permutation.hpp>
#include <satpat/sat_oracle.hpp>
#include <satpat/verifier.hpp>
#include <satpat/witness.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <memory>
#include <sstream>
#include <thread>

namespace satpat::cli {

namespace {

using std::string;

/// Raised for unusable input; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

string slurp(const string &arg) {
    // A literal "perm: ..." argument stands for a file with that content.
    if (arg.starts_with("perm:") && !std::filesystem::exists(arg))
        return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matrix01 load_matrix(const string &arg) {
    const auto text = slurp(arg);
    if (looks_like_certificate(text))
        return parse_certificate(text).matrix;
    return parse_matrix(text);
}

Pattern load_pattern(const string &arg) {
    const auto text = slurp(arg);
    if (looks_like_certificate(text))
        return parse_certificate(text).pattern;
    return Pattern(parse_matrix(text));
}

void write_file(const string &path, const string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content))
        throw InputError("cannot write '" + path + "'");
}

struct Options {
    bool quiet = false;
    double budget = 0;

    string file;
    bool tall = false;
    bool wide = false;
    string kind = "full";
    string out_path;
    string matrix_path;
    string pattern_path;
    string claim;
    string certificate_path;
    int rows = 0;
    int cols = 0;
    bool ex = false;
};

struct Result {
    int code = ok;
    string out;
    string err;
};

using Command = std::function<int(std::ostream &, std::ostream &)>;

int cmd_info(const Options &o, std::ostream &out) {
    const auto m = load_matrix(o.file);
    out << "dimensions: " << m.rows() << "x" << m.cols() << '\n';
    out << "weight: " << m.weight() << '\n';
    const auto perm = PermutationMatrix::try_from_matrix(m);
    out << "permutation: " << (perm ? "yes" : "no") << '\n';
    out << "reduced: " << (is_reduced(m) ? "yes" : "no") << '\n';
    out << "decompose: " << to_string(perm ? decompose_kind(*perm) : decompose_kind(m)) << '\n';
    if (perm) {
        const auto ex = extremes(*perm);
        out << "extremes: l=" << ex.ell << " t=" << ex.t << " b=" << ex.b << " r=" << ex.r << '\n';
    }
    return ok;
}

int cmd_classify(const Options &o, std::ostream &out) {
    const auto c = classify(load_pattern(o.file));
    out << to_string(c.verdict) << " (" << to_string(c.reason) << ")\n";
    return ok;
}

int cmd_oscillation(const Options &o, std::ostream &out) {
    const auto m = load_matrix(o.file);
    const auto perm = PermutationMatrix::try_from_matrix(m);
    if (!perm)
        throw InputError("oscillation needs a permutation matrix");
    auto osc = find_min_spanning_oscillation(*perm);
    if (!osc) {
        out << "none\n";
        return negative;
    }
    if (o.tall || o.wide)
        osc = straighten(*perm, osc->seq, o.tall ? Orientation::tall : Orientation::wide);
    out << format_sequence(osc->seq) << '\n';
    return ok;
}

int cmd_witness(const Options &o, std::ostream &out) {
    const auto p = load_pattern(o.file);
    WitnessCertificate c = [&] {
        if (o.kind == "vertical")
            return vertical_witness(p);
        if (o.kind == "horizontal")
            return horizontal_witness(p);
        if (o.kind == "full")
            return full_witness(p);
        return explicit_witness(p);
    }();
    const auto text = serialize(c);
    if (o.out_path.empty())
        out << text;
    else
        write_file(o.out_path, text);
    return ok;
}

int cmd_verify(const Options &o, std::ostream &out) {
    CertifyResult verdict;
    if (!o.certificate_path.empty()) {
        const auto text = slurp(o.certificate_path);
        if (!looks_like_certificate(text))
            throw InputError("'" + o.certificate_path + "' is not a certificate");
        auto c = parse_certificate(text);
        if (!o.claim.empty()) {
            const auto role = parse_role(o.claim);
            if (!role)
                throw InputError("unknown claim '" + o.claim + "'");
            c.role = *role;
        }
        verdict = certify(c);
    } else {
        if (o.matrix_path.empty() || o.pattern_path.empty() || o.claim.empty())
            throw InputError("verify needs a certificate or --matrix, --pattern and --claim");
        const auto role = parse_role(o.claim);
        if (!role)
            throw InputError("unknown claim '" + o.claim + "'");
        verdict = certify(load_matrix(o.matrix_path), load_pattern(o.pattern_path), *role);
    }
    if (verdict) {
        out << "ok\n";
        return ok;
    }
    out << "rejected: " << verdict.diagnostic << '\n';
    return negative;
}

int cmd_contains(const Options &o, std::ostream &out) {
    const auto m = load_matrix(o.matrix_path);
    const auto p = load_pattern(o.pattern_path);
    const auto e = find_embedding(m, p);
    if (!e) {
        out << "avoids\n";
        return negative;
    }
    out << "contains:";
    for (const auto &x : e->image)
        out << ' ' << x;
    out << '\n';
    return ok;
}

int cmd_sat(const Options &o, std::ostream &out) {
    const auto p = load_pattern(o.file);
    const auto r = o.ex ? ex_bruteforce(p, o.rows, o.cols) : sat_bruteforce(p, o.rows, o.cols);
    out << (o.ex ? "ex" : "sat") << "(" << o.rows << "," << o.cols << ") = " << r.weight << '\n';
    out << render_matrix_file(r.witness_matrix);
    return ok;
}

// Runs `cmd` and converts library exceptions into exit code 2.
Result guarded(const Command &cmd) {
    Result r;
    std::ostringstream out, err;
    try {
        r.code = cmd(out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        r.code = failure;
    }
    r.out = out.str();
    r.err = err.str();
    return r;
}

Result with_budget(const Command &cmd, double seconds) {
    if (seconds <= 0)
        return guarded(cmd);
    auto task = std::make_shared<std::packaged_task<Result()>>([cmd] { return guarded(cmd); });
    auto future = task->get_future();
    std::thread([task] { (*task)(); }).detach();
    if (future.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::ready)
        return future.get();
    return {failure, "", "error: budget of " + std::to_string(seconds) + " s exceeded\n"};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Saturation witnesses for 0-1 matrix patterns", "satpat"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("-q,--quiet", o.quiet, "Print nothing; report through the exit code only");

    auto *info = app.add_subcommand("info", "Dimensions, weight and structure of a matrix");
    info->add_option("file", o.file, "Matrix file")->required();

    auto *cls = app.add_subcommand("classify", "Bounded or linear saturation function");
    cls->add_option("file", o.file, "Pattern file")->required();

    auto *osc = app.add_subcommand("oscillation", "Minimum spanning oscillation of a permutation matrix");
    osc->add_option("file", o.file, "Permutation matrix file")->required();
    auto *tall = osc->add_flag("--tall", o.tall, "Straighten to a tall oscillation");
    osc->add_flag("--wide", o.wide, "Straighten to a wide oscillation")->excludes(tall);

    auto *wit = app.add_subcommand("witness", "Build and self-check a witness certificate");
    wit->add_option("file", o.file, "Pattern file")->required();
    wit->add_option("--kind", o.kind, "vertical, horizontal, full or explicit")
        ->check(CLI::IsMember({"vertical", "horizontal", "full", "explicit"}));
    wit->add_option("--out", o.out_path, "Write the certificate here instead of printing it");
    wit->add_option("--budget", o.budget, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);

    auto *ver = app.add_subcommand("verify", "Check a claim about a matrix from scratch");
    ver->add_option("certificate,--certificate", o.certificate_path, "Certificate file");
    ver->add_option("--matrix", o.matrix_path, "Matrix file");
    ver->add_option("--pattern", o.pattern_path, "Pattern file");
    ver->add_option("--claim", o.claim, "avoids, vertical, horizontal, witness, explicit or saturating");

    auto *con = app.add_subcommand("contains", "Exit 0 when the matrix contains the pattern, 1 otherwise");
    con->add_option("--matrix", o.matrix_path, "Matrix file")->required();
    con->add_option("--pattern", o.pattern_path, "Pattern file")->required();

    auto *sat = app.add_subcommand("sat", "Brute-force sat(P, m, n) or ex(P, m, n)");
    sat->add_option("file", o.file, "Pattern file")->required();
    sat->add_option("--rows", o.rows, "Rows m")->required();
    sat->add_option("--cols", o.cols, "Columns n")->required();
    sat->add_flag("--ex", o.ex, "Maximum avoiding weight instead");
    sat->add_option("--budget", o.budget, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);

    std::vector<const char *> argv{"satpat"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : failure;
    }

    Command cmd;
    if (info->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_info(o, os); };
    else if (cls->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_classify(o, os); };
    else if (osc->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_oscillation(o, os); };
    else if (wit->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_witness(o, os); };
    else if (ver->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_verify(o, os); };
    else if (con->parsed())
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_contains(o, os); };
    else
        cmd = [o](std::ostream &os, std::ostream &) { return cmd_sat(o, os); };

    const auto r = with_budget(cmd, o.budget);
    if (!o.quiet) {
        out << r.out;
        err << r.err;
    }
    return r.code;
}

} // namespace satpat::cli
