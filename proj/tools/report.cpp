#include "report.hpp"

#include "extremal/bounds.hpp"
#include "extremal/charser.hpp"
#include "extremal/chimat.hpp"
#include "extremal/classify.hpp"
#include "extremal/reedmuller.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace extremal::cli {

namespace {

std::string str(const Rational& r) { return r.to_string(); }

std::string cell(const Record& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ' ';
            out += cell(e);
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

Record chi_fields(Record rec, const CharMatrix& m) {
    rec["chi00"] = str(m.x);
    rec["chi01"] = str(m.y);
    rec["chi10"] = str(m.z);
    rec["chi11"] = str(m.w);
    return rec;
}

Record coeff_list(const std::vector<Rational>& cs) {
    Record a = Record::array();
    for (const auto& c : cs) a.push_back(str(c));
    return a;
}

std::string enumerator_string(const rm::WeightEnumerator& e) {
    std::string out;
    for (const auto& [w, n] : e) {
        if (!out.empty()) out += ' ';
        out += std::to_string(w) + ":" + std::to_string(n);
    }
    return out;
}

Record check(const std::string& name, bool pass, const std::string& detail) {
    Record r;
    r["check"] = name;
    r["result"] = pass ? "pass" : "fail";
    r["detail"] = detail;
    return r;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string render(const Record& records, Format format) {
    if (format == Format::json) return records.dump(2) + "\n";
    if (records.empty()) return "";
    std::vector<std::string> keys;
    for (const auto& item : records.front().items()) keys.push_back(item.key());

    std::ostringstream out;
    if (format == Format::csv) {
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_escape(keys[i]);
        out << '\n';
        for (const auto& rec : records) {
            for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_escape(cell(rec.at(keys[i])));
            out << '\n';
        }
        return out.str();
    }
    out << '|';
    for (const auto& k : keys) out << ' ' << md_escape(k) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < keys.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& rec : records) {
        out << '|';
        for (const auto& k : keys) out << ' ' << md_escape(cell(rec.at(k))) << " |";
        out << '\n';
    }
    return out.str();
}

Record catalog_report() {
    Record rows = Record::array();
    int index = 1;
    for (const auto& info : catalog()) {
        const auto& s = info.s_matrix;
        auto surd = [](const QuadraticSurd& q) {
            if (q.b.is_zero()) return str(q.a);
            std::string out = q.a.is_zero() ? "" : str(q.a) + (q.b.sign() > 0 ? "+" : "");
            return out + str(q.b) + "*sqrt(" + std::to_string(q.d) + ")";
        };
        Record r;
        r["index"] = index++;
        r["category"] = std::string(info.slug);
        r["name"] = std::string(info.display_name);
        r["s_radicand"] = surd(s.radicand);
        r["s_entries"] = Record::array({surd(s.entries[0][0]), surd(s.entries[0][1]), surd(s.entries[1][0]),
                                        surd(s.entries[1][1])});
        r["c"] = str(info.c_printed);
        r["h"] = str(info.h_printed);
        r["c_mod8"] = str(info.c_mod8);
        r["h_mod1"] = str(info.h_mod1);
        r["extremal_realization"] = std::string(info.extremal_realization);
        rows.push_back(r);
    }
    return rows;
}

BoundsTable parse_bounds_table(const std::string& s) {
    if (s == "extremes") return BoundsTable::extremes;
    if (s == "positive") return BoundsTable::positive;
    if (s == "negative") return BoundsTable::negative;
    throw std::invalid_argument("unknown bounds table '" + s + "'");
}

Record bounds_report(std::optional<CategoryId> id, BoundsTable table) {
    Record rows = Record::array();
    for (CategoryId cat : kAllCategories) {
        if (id && *id != cat) continue;
        if (table == BoundsTable::extremes) {
            const CExtremes e = c_extremes(cat);
            Record r;
            r["category"] = std::string(to_slug(cat));
            r["c_min"] = str(e.c_min);
            r["c_max"] = str(e.c_max);
            rows.push_back(r);
            continue;
        }
        for (int k = 0; k < 3; ++k) {
            const BoundReport b = table == BoundsTable::positive ? positive_report(cat, k) : negative_report(cat, k);
            Record r;
            r["category"] = std::string(to_slug(cat));
            r["c"] = str(b.class_rep_c);
            r = chi_fields(r, b.chi);
            r["h_ext"] = str(b.h);
            if (table == BoundsTable::negative) {
                const AlphaBeta ab = alpha_beta(b.chi);
                r["alpha"] = str(ab.alpha);
                r["beta"] = str(ab.beta);
            }
            std::ostringstream t;
            t.precision(6);
            t << b.threshold();
            r["threshold"] = t.str();
            r["n_max"] = std::to_string(b.n_max);
            rows.push_back(r);
        }
    }
    return rows;
}

Record classify_report(std::optional<CategoryId> id, int order, bool& all_match) {
    const std::vector<ClassificationRow> found = id ? classify_category(*id, order) : classify_all(order);
    if (id) {
        std::vector<ClassificationRow> expected;
        for (const auto& g : golden_genera())
            if (g.category == *id) expected.push_back({g.category, g.c, g.h_ext, g.ell, {}, {}});
        all_match = expected.size() == found.size();
        for (std::size_t i = 0; all_match && i < found.size(); ++i)
            all_match = found[i].c == expected[i].c && found[i].h_ext == expected[i].h_ext &&
                        found[i].ell == expected[i].ell;
    } else {
        all_match = matches_golden(found);
    }
    Record rows = Record::array();
    for (const auto& row : found) {
        Record r;
        r["category"] = std::string(to_slug(row.category));
        r["c"] = str(row.c);
        r["h_ext"] = str(row.h_ext);
        r["ell"] = std::to_string(row.ell);
        r["dim_v1"] = str(row.chi.x);
        r["module_multiplicity"] = str(row.chi.z);
        r["realization"] = row.realization_note;
        rows.push_back(r);
    }
    return rows;
}

Record character_report(CategoryId id, const Rational& c, int order) {
    const CharacterVector v = character_for(id, c, order);
    Record rows = Record::array();
    auto add = [&](const char* name, const GradedSeries& s) {
        Record r;
        r["component"] = name;
        r["exponent"] = str(s.exponent);
        r["coefficients"] = coeff_list(s.coeffs);
        rows.push_back(r);
    };
    add("vacuum", v.vacuum);
    add("module", v.module);
    return rows;
}

Record chi_report(CategoryId id, const Rational& c) {
    const Genus g = make_genus(id, c);
    const ChiState st = chi_at(id, c);
    const AlphaBeta ab = alpha_beta(st.chi);
    Record r;
    r["category"] = std::string(to_slug(id));
    r["c"] = str(c);
    r["h_ext"] = str(g.h_ext);
    r["ell"] = str(g.ell);
    r = chi_fields(r, st.chi);
    r["alpha"] = str(ab.alpha);
    r["beta"] = str(ab.beta);
    return Record::array({r});
}

Record rm_report(bool& ok) {
    using namespace rm;
    const ReedMullerCodes& codes = rm_codes();
    Record rows = Record::array();

    const WeightEnumerator e16 = weight_enumerator(codes.rm16);
    rows.push_back(check("RM(1,6) weight enumerator", e16 == WeightEnumerator{{0, 1}, {32, 126}, {64, 1}},
                         enumerator_string(e16)));

    const bool rm24_dual = codes.rm24 == codes.rm14.dual() && codes.rm24.dimension() == 11;
    rows.push_back(check("RM(2,4) is the dual of RM(1,4)", rm24_dual,
                         "dim " + std::to_string(codes.rm24.dimension())));

    const MinWeightReport mw = min_weight_rm46();
    rows.push_back(check("RM(4,6) minimum weight", mw.min_weight == 4 && mw.words_scanned == 43744,
                         std::to_string(mw.min_weight) + " after " + std::to_string(mw.words_scanned) +
                             " lighter words; witness " + mw.witness.to_string()));

    bool agree = true;
    for (const auto& w : codes.rm16.codewords()) agree = agree && rm46_member(w) == codes.rm46.contains(w);
    std::mt19937_64 rng(20190617);
    for (int i = 0; i < 10000; ++i) {
        const Codeword w(64, rng());
        agree = agree && rm46_member(w) == codes.rm46.contains(w);
    }
    rows.push_back(check("block characterization of RM(4,6)", agree, "128 code words and 10000 random words"));

    const WeightSixScan l6 = weight_six_scan();
    rows.push_back(check("weight-6 words of RM(2,4)",
                         l6.weight6_count == 448 && l6.conditions_pass == 448 && l6.enumerator_matches == 448,
                         std::to_string(l6.weight6_count) + " words, " + std::to_string(l6.conditions_pass) +
                             " satisfy (i)-(iv), " + std::to_string(l6.enumerator_matches) +
                             " have coset enumerator 28:64 36:64"));

    const XiCertificate cert = verify_xi_certificate();
    const SubcodeConditions& cd = cert.conditions;
    const bool cond = cd.cond_i && cd.cond_ii && cd.cond_iii && cd.cond_iv && cd.cond_iv_67 && cd.consistent();
    rows.push_back(check("alpha", cert.alpha_in_rm24 && cert.alpha_weight == 6,
                         cert.alpha.to_string() + " in RM(2,4), weight " + std::to_string(cert.alpha_weight)));
    rows.push_back(check("xi", cond, cert.xi.to_string()));
    rows.push_back(check("xi conditions (i)-(iv)", cond,
                         std::string("i=") + (cd.cond_i ? "1" : "0") + " ii=" + (cd.cond_ii ? "1" : "0") +
                             " iii=" + (cd.cond_iii ? "1" : "0") + " iv=" + (cd.cond_iv ? "1" : "0") +
                             " gamma6,7=" + (cd.cond_iv_67 ? "1" : "0")));
    rows.push_back(check("coset weight enumerator", cert.coset_enumerator == WeightEnumerator{{28, 64}, {36, 64}},
                         enumerator_string(cert.coset_enumerator)));
    rows.push_back(check("top weight", cert.top_weight == Rational(7, 4),
                         "top weight " + str(cert.top_weight)));

    ok = true;
    for (const auto& r : rows) ok = ok && r["result"] == "pass";
    return rows;
}

}  // namespace extremal::cli
