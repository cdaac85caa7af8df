// Command-line front end: verify the paper's identities, enumerate
// partition families, and print truncated series coefficients.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "schmidt/verify.hpp"

namespace {

using namespace schmidt;

SeriesCaps default_caps() {
    SeriesCaps caps{8, 3};
    if (const char* env = std::getenv("SCHMIDT_DEFAULT_CAPS")) {
        std::string text(env);
        auto comma = text.find(',');
        try {
            caps.n = std::stoi(text.substr(0, comma));
            if (comma == std::string::npos) {
                caps.d.reset();
            } else {
                std::string d = text.substr(comma + 1);
                if (d == "inf" || d == "-1")
                    caps.d.reset();
                else
                    caps.d = std::stoll(d);
            }
        } catch (const std::exception&) {
            throw ParameterError("SCHMIDT_DEFAULT_CAPS: want \"N,D\" (D may be inf)");
        }
    }
    return caps;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& entries) {
    std::map<std::string, std::string> out;
    for (const std::string& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos)
            throw ParameterError("--params entries look like key=value (got '" + e + "')");
        out[e.substr(0, eq)] = e.substr(eq + 1);
    }
    return out;
}

struct CapOptions {
    int n = -1;
    long long d = -2;  // -2: default, -1: unbounded

    SeriesCaps resolve() const {
        SeriesCaps caps = default_caps();
        if (n >= 0) caps.n = n;
        if (d == -1)
            caps.d.reset();
        else if (d >= 0)
            caps.d = d;
        return caps;
    }
};

int cmd_verify(const std::string& id, const CapOptions& caps_opt,
               const std::vector<std::string>& params, const std::vector<std::string>& colors,
               const std::string& json_path, bool timings, int jobs) {
    SeriesCaps caps = caps_opt.resolve();
    ColorAssignment assign = ColorAssignment::parse(colors);
    auto raw = parse_params(params);
    std::vector<VerifyReport> reports;
    if (id == "all") {
        if (!raw.empty())
            throw ParameterError("--params applies to a single identity, not --id all");
        reports = verify_all(caps, assign, jobs);
    } else {
        reports.push_back(verify(id, raw, caps, assign));
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << report_text(r, timings) << '\n';
        if (r.status == VerifyReport::Status::Fail) all_pass = false;
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw ParameterError("cannot open JSON output path '" + json_path + "'");
        out << reports_json(reports, timings);
    }
    return all_pass ? 0 : 1;
}

int cmd_enumerate(const std::string& family, int m, const std::string& s_spec, long long wt,
                  long long swt, bool distinct, long long limit, const CapOptions& caps_opt) {
    if ((wt < 0) == (swt < 0))
        throw ParameterError("enumerate: give exactly one of --weight / --s-weight");
    FamilyTag tag = FamilyTag::parse(family, m);
    IndexSet S = swt >= 0 ? IndexSet::parse(s_spec) : IndexSet::all();
    long long target = swt >= 0 ? swt : wt;
    SeriesCaps caps = caps_opt.resolve();
    std::optional<long long> size_cap;
    if (S.element(1) != 1) {
        if (!caps.d)
            throw InfiniteSetError("enumerate: S misses 1, pass a finite --D color cap");
        size_cap = *caps.d;
    }
    long long count = 0;
    bool truncated = false;
    enum_family_by_s_weight(tag, S, target, size_cap, [&](const OverPartition& l) {
        if (s_weight(l, S) != target) return;
        if (distinct) {
            for (long long i = 1; i < l.support(); ++i)
                if (diff(l.at(i), l.at(i + 1)) == 0) return;
        }
        if (limit >= 0 && count >= limit) {
            truncated = true;
            return;
        }
        std::cout << to_text(l) << '\n';
        ++count;
    });
    std::cout << "# count: " << count << (truncated ? " (truncated by --limit)" : "") << '\n';
    return 0;
}

int cmd_coeffs(const std::string& id, const CapOptions& caps_opt,
               const std::vector<std::string>& params, const std::vector<std::string>& colors) {
    SeriesCaps caps = caps_opt.resolve();
    IdentityParams p;
    p.assign = ColorAssignment::parse(colors);
    auto raw = parse_params(params);
    if (auto it = raw.find("S"); it != raw.end()) p.S = IndexSet::parse(it->second);
    if (auto it = raw.find("U"); it != raw.end()) p.U = BlockType::parse(it->second);
    if (raw.count("m") && raw.count("t") && raw.count("s")) {
        std::vector<long long> s;
        std::istringstream in(raw["s"]);
        std::string item;
        while (std::getline(in, item, ',')) s.push_back(std::stoll(item));
        p.shape = ModMShape(std::stoi(raw["m"]), std::stoi(raw["t"]), std::move(s));
    } else if (raw.count("m")) {
        p.m = std::stoi(raw["m"]);
    }
    if (raw.count("l")) p.l = std::stoi(raw["l"]);
    if (raw.count("k")) p.k = std::stoi(raw["k"]);
    std::cout << build_rhs(id, p, caps).text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schmidt-type over-partition identity toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check identities against enumeration");
    std::string id = "all", json_path;
    CapOptions caps;
    std::vector<std::string> params, colors;
    bool timings = false;
    int jobs = 0;
    verify_cmd->add_option("--id", id, "identity id or 'all'");
    verify_cmd->add_option("--N", caps.n, "q-degree cap");
    verify_cmd->add_option("--D", caps.d, "color degree cap (-1 = unbounded)");
    verify_cmd->add_option("--params", params, "identity parameters key=value");
    verify_cmd->add_option("--set-colors", colors, "color assignments (all=1, c2=1, c3~=c1~)");
    verify_cmd->add_option("--json", json_path, "write a JSON report");
    verify_cmd->add_flag("--timings", timings, "include wall times in output");
    verify_cmd->add_option("--jobs", jobs, "worker threads for --id all");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list family members in canonical form");
    std::string family = "ovp", s_spec = "odds";
    int fam_m = 2;
    long long wt = -1, swt = -1, limit = -1;
    bool distinct = false;
    enum_cmd->add_option("--family", family, "ovp|p|ovd|ovf|ovp_m|p_m|ovf_m");
    enum_cmd->add_option("--m", fam_m, "modulus for the _m families");
    enum_cmd->add_option("--S", s_spec, "index set spec (for --s-weight)");
    enum_cmd->add_option("--weight", wt, "enumerate by weight");
    enum_cmd->add_option("--s-weight", swt, "enumerate by S-weight");
    enum_cmd->add_flag("--distinct", distinct, "restrict to distinct part sizes");
    enum_cmd->add_option("--limit", limit, "stop after this many lines");
    enum_cmd->add_option("--D", caps.d, "color degree cap (bounds sizes when S misses 1)");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "print an identity's RHS expansion");
    std::string rhs_id;
    coeffs_cmd->add_option("--rhs", rhs_id, "identity id")->required();
    coeffs_cmd->add_option("--N", caps.n, "q-degree cap");
    coeffs_cmd->add_option("--D", caps.d, "color degree cap (-1 = unbounded)");
    coeffs_cmd->add_option("--params", params, "identity parameters key=value");
    coeffs_cmd->add_option("--set-colors", colors, "color assignments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(id, caps, params, colors, json_path, timings, jobs);
        if (enum_cmd->parsed())
            return cmd_enumerate(family, fam_m, s_spec, wt, swt, distinct, limit, caps);
        if (coeffs_cmd->parsed()) return cmd_coeffs(rhs_id, caps, params, colors);
    } catch (const schmidt::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const schmidt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
