#include "lrforest/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "lrforest/serialize.hpp"

namespace lrforest {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr long kPairWitnessDefaultBound = 12;

std::string csv_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int cmd_orbit(const GaussianRational& z, const PairParams& p, int depth,
              int depth_cap, const std::string& format, std::ostream& out) {
    OrbitTree tree = orbit(z, p, depth, depth_cap);
    if (format == "dot")
        out << to_dot(tree);
    else
        out << to_json(tree).dump() << "\n";
    return kExitTrue;
}

int cmd_trace(const GaussianRational& z, const PairParams& p, long max_steps,
              std::ostream& out) {
    out << to_json(trace_to_root(z, p, max_steps)).dump() << "\n";
    return kExitTrue;
}

int cmd_same_tree(const GaussianRational& z1, const GaussianRational& z2,
                  const PairParams& p, long max_steps, std::ostream& out) {
    bool same = same_tree(z1, z2, p, max_steps);
    out << (same ? "true" : "false") << "\n";
    return same ? kExitTrue : kExitFalse;
}

int cmd_classify(const GaussianRational& z, const PairParams& p, std::ostream& out) {
    RegionIndex n = crescent_index(z, p.u());
    bool orphan = is_orphan(z, p);
    // built by hand: the crescent index is an arbitrary-precision integer
    out << "{\"crescent\":" << n.get_str()
        << ",\"orphan\":" << (orphan ? "true" : "false") << "}\n";
    return kExitTrue;
}

int cmd_pair_check(const Mat& l, const Mat& r, long verify_bound,
                   bool verify_requested, std::ostream& out, std::ostream& err) {
    bool pair = is_left_right_pair(l, r);
    out << (pair ? "PAIR" : "NOT-PAIR") << "\n";
    if (pair) {
        if (verify_requested) {
            if (auto w = find_overlap_witness(l, r, verify_bound)) {
                err << "error: oracle contradicts PAIR with witness z2 = "
                    << format_number(w->z2) << "\n";
                return kExitError;
            }
            out << "oracle: no witness found (bound " << verify_bound << ")\n";
        }
        return kExitTrue;
    }
    long bound = verify_requested ? verify_bound : kPairWitnessDefaultBound;
    if (auto w = find_overlap_witness(l, r, bound)) {
        out << "witness z1 = " << format_number(w->z1) << "\n";
        out << "witness z2 = " << format_number(w->z2) << "\n";
        out << "common image L(z1) = R(z2) = " << format_number(l.apply(w->z1))
            << "\n";
    } else {
        out << "no witness within bound " << bound << "\n";
    }
    return kExitFalse;
}

int cmd_decompose(const Mat& t, const PairParams& p, std::ostream& out) {
    if (auto w = decompose_word(t, p)) {
        out << w->to_string() << "\n";
        return kExitTrue;
    }
    out << "NOT-MEMBER\n";
    return kExitFalse;
}

int cmd_member(const Mat& t, const PairParams& p, std::ostream& out) {
    bool member = is_member(t, p);
    out << (member ? "true" : "false") << "\n";
    return member ? kExitTrue : kExitFalse;
}

int cmd_regions(long u, long v, int nmax, int samples, std::ostream& out) {
    if (nmax < 1)
        throw DomainError("regions requires nmax >= 1");
    if (samples < 2)
        throw DomainError("regions requires samples >= 2");
    out << "region_kind,n,x,y\n";
    // boundary of D_n: circle with center (1/(2nu), 0), radius 1/(2nu),
    // sampled at evenly spaced x so both endpoints land exactly on y = 0
    for (int n = 1; n <= nmax; ++n) {
        double radius = 1.0 / (2.0 * static_cast<double>(n) * static_cast<double>(u));
        for (int k = 0; k < samples; ++k) {
            double x = 2.0 * radius * k / (samples - 1);
            double dx = x - radius;
            double y = std::sqrt(std::max(0.0, radius * radius - dx * dx));
            out << "circle," << n << "," << csv_float(x) << "," << csv_float(y) << "\n";
        }
    }
    // boundary of the right-parent half plane: x = v, drawn up to the
    // top of the tallest crescent
    double ymax = 1.0 / (2.0 * static_cast<double>(u));
    for (int k = 0; k < samples; ++k) {
        double y = ymax * k / (samples - 1);
        out << "line,0," << csv_float(static_cast<double>(v)) << "," << csv_float(y)
            << "\n";
    }
    return kExitTrue;
}

int cmd_cusp(const std::string& tail, const std::string& prefix,
             const PairParams& p, std::ostream& out) {
    PathSpec spec;
    spec.prefix = Word::from_string(prefix);
    if (tail == "L")
        spec.tail = PathTail::AllL;
    else if (tail == "R")
        spec.tail = PathTail::AllR;
    else if (tail == "both")
        spec.tail = PathTail::BothInfinitelyOften;
    else
        throw DomainError("cusp tail must be L, R, or both");
    switch (classify_path(spec, p)) {
    case CuspClass::Zero:
        out << "0\n";
        break;
    case CuspClass::Infinity:
        out << "infinity\n";
        break;
    case CuspClass::Divergent:
        out << "divergent\n";
        break;
    }
    return kExitTrue;
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& err) {
    int worst = kExitTrue;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::vector<std::string> args;
        std::string tok;
        while (tokens >> tok)
            args.push_back(tok);
        if (args.empty() || args.front().starts_with('#'))
            continue;
        if (args.front() == "batch") {
            err << "error: batch lines cannot nest batch\n";
            worst = std::max(worst, kExitError);
            continue;
        }
        std::istringstream no_input;
        worst = std::max(worst, run_cli(args, no_input, out, err));
    }
    return worst;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"forests of binary trees on the positive complex quadrant, in exact arithmetic"};
    app.name("lrforest");
    app.require_subcommand(0, 1);

    long u = 1, v = 1;
    std::string z_text, z1_text, z2_text, l_text, r_text, t_text;
    std::string format = "json", tail, prefix;
    int depth = 3, depth_cap = kDefaultOrbitDepthCap, nmax = 4, samples = 64;
    long max_steps = kDefaultTraceMaxSteps;
    long verify_bound = kPairWitnessDefaultBound;

    auto add_uv = [&](CLI::App* cmd) {
        cmd->add_option("--u", u, "left generator parameter")->capture_default_str();
        cmd->add_option("--v", v, "right generator parameter")->capture_default_str();
    };

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "descendant tree of a point");
    orbit_cmd->add_option("--z", z_text, "starting point literal")->required();
    add_uv(orbit_cmd);
    orbit_cmd->add_option("--depth", depth, "generations to expand")->capture_default_str();
    orbit_cmd->add_option("--depth-cap", depth_cap, "maximum allowed depth")
        ->capture_default_str();
    orbit_cmd->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();

    CLI::App* trace_cmd = app.add_subcommand("trace", "ancestor chain up to the root orphan");
    trace_cmd->add_option("--z", z_text, "point literal")->required();
    add_uv(trace_cmd);
    trace_cmd->add_option("--max-steps", max_steps, "step safety valve")->capture_default_str();

    CLI::App* same_cmd = app.add_subcommand("same-tree", "do two points share a root?");
    same_cmd->add_option("--z1", z1_text, "first point")->required();
    same_cmd->add_option("--z2", z2_text, "second point")->required();
    add_uv(same_cmd);
    same_cmd->add_option("--max-steps", max_steps, "step safety valve")->capture_default_str();

    CLI::App* classify_cmd = app.add_subcommand("classify", "crescent index and orphan test");
    classify_cmd->add_option("--z", z_text, "point literal")->required();
    add_uv(classify_cmd);

    CLI::App* pair_cmd = app.add_subcommand("pair-check", "left-right pair decision");
    pair_cmd->add_option("--L", l_text, "left matrix [[a,b],[c,d]]")->required();
    pair_cmd->add_option("--R", r_text, "right matrix [[a,b],[c,d]]")->required();
    CLI::Option* vb =
        pair_cmd->add_option("--verify-bound", verify_bound, "witness search bound")
            ->capture_default_str();

    CLI::App* decomp_cmd = app.add_subcommand("decompose", "word of a matrix, if any");
    decomp_cmd->add_option("--T", t_text, "matrix [[a,b],[c,d]]")->required();
    add_uv(decomp_cmd);

    CLI::App* member_cmd = app.add_subcommand("member", "semigroup membership");
    member_cmd->add_option("--T", t_text, "matrix [[a,b],[c,d]]")->required();
    add_uv(member_cmd);

    CLI::App* regions_cmd = app.add_subcommand("regions", "CSV boundary data for the half disks");
    add_uv(regions_cmd);
    regions_cmd->add_option("--nmax", nmax, "largest disk index")->capture_default_str();
    regions_cmd->add_option("--samples", samples, "points per boundary")->capture_default_str();

    CLI::App* cusp_cmd = app.add_subcommand("cusp", "limit of an infinite path");
    cusp_cmd->add_option("--tail", tail, "L, R, or both")->required();
    cusp_cmd->add_option("--prefix", prefix, "finite prefix word")->capture_default_str();
    add_uv(cusp_cmd);

    CLI::App* batch_cmd = app.add_subcommand("batch", "run one command per stdin line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (app.get_subcommands().empty()) {
            out << app.help();
            return kExitTrue;
        }
        if (batch_cmd->parsed())
            return run_batch(in, out, err);

        PairParams p(u, v);
        if (orbit_cmd->parsed())
            return cmd_orbit(parse_number(z_text), p, depth, depth_cap, format, out);
        if (trace_cmd->parsed())
            return cmd_trace(parse_number(z_text), p, max_steps, out);
        if (same_cmd->parsed())
            return cmd_same_tree(parse_number(z1_text), parse_number(z2_text), p,
                                 max_steps, out);
        if (classify_cmd->parsed())
            return cmd_classify(parse_number(z_text), p, out);
        if (pair_cmd->parsed())
            return cmd_pair_check(Mat::parse(l_text), Mat::parse(r_text),
                                  verify_bound, !vb->empty(), out, err);
        if (decomp_cmd->parsed())
            return cmd_decompose(Mat::parse(t_text), p, out);
        if (member_cmd->parsed())
            return cmd_member(Mat::parse(t_text), p, out);
        if (regions_cmd->parsed())
            return cmd_regions(u, v, nmax, samples, out);
        if (cusp_cmd->parsed())
            return cmd_cusp(tail, prefix, p, out);
        err << "error: unknown subcommand\n";
        return kExitError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace lrforest
