// extremal: tables of rank-two extremal character vectors and the
// Reed-Muller certificate for the c = 33 construction.

#include "report.hpp"

#include "extremal/classify.hpp"
#include "extremal/genus.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace {

constexpr const char* kVersion = "extremal 1.0.0";

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "md";
    int order = extremal::kDefaultOrder;
    std::string out;
    std::string check;
};

std::optional<extremal::CategoryId> optional_category(const std::string& s) {
    if (s.empty() || s == "all") return std::nullopt;
    try {
        return extremal::parse_category(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

extremal::CategoryId required_category(const std::string& s) {
    auto id = optional_category(s);
    if (!id) throw UsageError("a single category is required");
    return *id;
}

extremal::Rational admissible_c(extremal::CategoryId id, const std::string& text) {
    extremal::Rational c;
    try {
        c = extremal::Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("cannot parse c = '" + text + "'");
    }
    if (!extremal::is_admissible(id, c))
        throw UsageError("c = " + c.to_string() + " is not admissible for " + std::string(extremal::to_slug(id)) +
                         "; expected c = " + extremal::category_info(id).c_mod8.to_string() + " (mod 8)");
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes or checks the rendered text. Returns the exit code.
int emit(const std::string& text, const Options& opt) {
    if (!opt.check.empty()) {
        if (read_file(opt.check) != text) {
            std::cerr << "output differs from " << opt.check << "\n";
            return kMismatch;
        }
        std::cerr << "matches " << opt.check << "\n";
        return kOk;
    }
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + opt.out);
        f << text;
        return kOk;
    }
    std::cout << text;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace extremal;
    CLI::App app{"Extremal vertex operator algebras with two simple modules"};
    app.require_subcommand(1);
    app.add_flag_callback(
        "--version",
        [] {
            std::cerr << kVersion << "\n";
            throw CLI::Success();
        },
        "print the version on stderr");

    Options opt;
    auto common = [&](CLI::App* sub, bool with_order) {
        sub->add_option("--format", opt.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        if (with_order) sub->add_option("--order", opt.order, "number of q-powers")->check(CLI::Range(1, 1000));
        sub->add_option("--out", opt.out, "write to this file instead of stdout");
        sub->add_option("--check", opt.check, "compare against this fixture instead of printing");
    };

    std::string category;
    std::string c_text;
    std::string bounds_table = "extremes";

    auto* catalog_cmd = app.add_subcommand("catalog", "the eight rank-two modular tensor categories");
    common(catalog_cmd, false);

    auto* bounds_cmd = app.add_subcommand("bounds", "c_min/c_max and the per-class bound tables");
    common(bounds_cmd, false);
    bounds_cmd->add_option("category", category, "category slug, or all");
    bounds_cmd->add_option("--table", bounds_table, "extremes, positive or negative")
        ->check(CLI::IsMember({"extremes", "positive", "negative"}));

    auto* classify_cmd = app.add_subcommand("classify", "surviving extremal genera");
    common(classify_cmd, true);
    classify_cmd->add_option("category", category, "category slug, or all");

    auto* character_cmd = app.add_subcommand("character", "character vector of one genus");
    common(character_cmd, true);
    character_cmd->add_option("category", category, "category slug")->required();
    character_cmd->add_option("c", c_text, "central charge, e.g. 33 or -22/5")->required();

    auto* chi_cmd = app.add_subcommand("chi", "characteristic matrix of one genus");
    common(chi_cmd, false);
    chi_cmd->add_option("category", category, "category slug")->required();
    chi_cmd->add_option("c", c_text, "central charge")->required();

    auto* rm_cmd = app.add_subcommand("rm", "Reed-Muller computations");
    auto* verify_cmd = rm_cmd->add_subcommand("verify", "certify the c = 33 involution");
    rm_cmd->require_subcommand(1);
    common(verify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const cli::Format format = cli::parse_format(opt.format);
        if (*catalog_cmd) return emit(cli::render(cli::catalog_report(), format), opt);
        if (*bounds_cmd)
            return emit(cli::render(cli::bounds_report(optional_category(category),
                                                       cli::parse_bounds_table(bounds_table)),
                                    format),
                        opt);
        if (*classify_cmd) {
            bool match = false;
            const auto rows = cli::classify_report(optional_category(category), opt.order, match);
            const int rc = emit(cli::render(rows, format), opt);
            if (!match) {
                std::cerr << "classification differs from the expected genera\n";
                return kMismatch;
            }
            return rc;
        }
        if (*character_cmd) {
            const CategoryId id = required_category(category);
            return emit(cli::render(cli::character_report(id, admissible_c(id, c_text), opt.order), format), opt);
        }
        if (*chi_cmd) {
            const CategoryId id = required_category(category);
            return emit(cli::render(cli::chi_report(id, admissible_c(id, c_text)), format), opt);
        }
        if (*verify_cmd) {
            bool ok = false;
            const auto rows = cli::rm_report(ok);
            const int rc = emit(cli::render(rows, format), opt);
            return ok ? rc : kMismatch;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
