#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mtc/document.hpp"
#include "mtc/errors.hpp"
#include "mtc/oracle.hpp"

namespace mtc::cli {

namespace {

// ---------------------------------------------------------------------------
// Budgets

struct Budgets {
    std::uint64_t distance = kDefaultDistanceBudget;
    std::uint64_t oracle = oracle::kDefaultEnumBudget;
};

Budgets budgets_from_env() {
    Budgets b;
    if (const char* v = std::getenv("MTC_ENUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(v, &end, 10);
        if (!*v || *end || n == 0) throw DomainError(std::string("MTC_ENUM_BUDGET must be a positive integer, got '") + v + "'");
        b.distance = b.oracle = n;
    }
    return b;
}

// ---------------------------------------------------------------------------
// Serialization

Json rows(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_string(m.field(), m.row(i)));
    return a;
}

Json rows(const PolyMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " | " : "") + to_string(m(i, j));
        a.push_back(s);
    }
    return a;
}

std::string shift_tuple(const Field& f, const std::vector<Elem>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f.format(v[i]);
    return s + ")";
}

Json profile_json(const MTProfile& p) {
    Json j;
    j["blocks"] = p.blocks();
    Json sh = Json::array();
    for (Elem e : p.shifts()) sh.push_back(p.field().format(e));
    j["shifts"] = sh;
    j["N"] = p.N();
    return j;
}

Json code_json(const LinearCode& c, const MTCode* m, const Budgets& b) {
    Json j;
    const DistanceInfo d = distance_info(c, b.distance);
    j["parameters"] = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," + d.str() + "]";
    j["length"] = c.length();
    j["dimension"] = c.dimension();
    j["distance"] = d.str();
    j["generator"] = rows(c.generator());
    if (m) {
        j["profile"] = profile_json(m->profile());
        j["gpm"] = rows(m->gpm());
        j["companion"] = rows(m->companion());
    }
    return j;
}

Json factors_json(const std::vector<FactorContribution>& fs) {
    Json a = Json::array();
    for (const auto& c : fs) {
        Json j;
        j["factor"] = to_string(c.p);
        j["multiplicity"] = c.multiplicity;
        j["type"] = c.type.r;
        j["weight"] = c.weight;
        a.push_back(j);
    }
    return a;
}

Json header(const std::string& command, const CodeDocument& doc) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["field"] = doc.field().header();
    return j;
}

// ---------------------------------------------------------------------------
// Oracle cross-checks

Json oracle_json(const std::function<bool()>& agree) {
    Json j;
    try {
        j["status"] = agree() ? "agrees" : "DISAGREES";
    } catch (const BudgetExceeded& e) {
        j["status"] = "skipped";
        j["reason"] = e.what();
    }
    return j;
}

bool oracle_disagrees(const Json& j) { return j.contains("oracle") && j["oracle"]["status"] == "DISAGREES"; }

oracle::CodewordSet reversed_set(const oracle::CodewordSet& s) {
    return oracle::map_words(s, [](const Vec& v) { return Vec(v.rbegin(), v.rend()); });
}

bool subset(const oracle::CodewordSet& a, const oracle::CodewordSet& b) {
    for (const Vec& w : a.words)
        if (!b.contains(w)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Commands

struct Outcome {
    Json report;
    int code = 0;
};

Outcome cmd_info(const CodeDocument& doc, const std::string& name, const Budgets& b) {
    const CodeBlock& blk = doc.get(name);
    Json j = header("info", doc);
    j["code"] = name;
    Json c = code_json(blk.code, blk.mt ? &*blk.mt : nullptr, b);
    for (auto& [k, v] : c.items()) j[k] = v;
    return {j, 0};
}

struct IntersectOptions {
    std::optional<unsigned> galois;
    bool linear = false;
    bool mt = false;
    bool oracle = false;
};

Outcome cmd_intersect(const CodeDocument& doc, const std::string& a, const std::string& b, const IntersectOptions& o,
                      const Budgets& bud) {
    const CodeBlock& A = doc.get(a);
    const CodeBlock& B = doc.get(b);
    const Field& f = doc.field();
    const unsigned e = f.degree();
    if (o.galois && *o.galois >= e)
        throw DomainError("Galois index " + std::to_string(*o.galois) + " out of range [0, " + std::to_string(e) + ")");
    if (A.code.length() != B.code.length())
        throw DomainError("code lengths differ: " + std::to_string(A.code.length()) + " vs " + std::to_string(B.code.length()));

    auto compatible = [&] {
        if (!A.mt || !B.mt) return false;
        if (!o.galois) return A.profile == B.profile;
        return A.profile->blocks() == B.profile->blocks() && A.profile->inverse().frobenius(e - *o.galois) == *B.profile;
    };
    bool use_mt = o.mt || (!o.linear && compatible());
    if (o.mt) {
        if (!A.mt || !B.mt) throw DomainError("--mt needs both codes to carry an MT profile");
        if (!o.galois && !(A.profile == B.profile))
            throw DomainError("profile mismatch: " + shift_tuple(f, A.profile->shifts()) + " vs " + shift_tuple(f, B.profile->shifts()) +
                              " or different blocks");
    }

    Json j = header("intersect", doc);
    j["left"] = a;
    j["right"] = b;
    j["mode"] = use_mt ? "mt" : "linear";
    if (o.galois) j["kappa"] = *o.galois;

    LinearCode lin = o.galois ? galois_intersect(A.code, B.code, *o.galois) : intersect(A.code, B.code);
    if (use_mt) {
        IntersectionResult r = o.galois ? galois_intersect_gpm(*A.mt, *B.mt, *o.galois) : intersect_gpm(*A.mt, *B.mt);
        LinearCode c = mt_to_linear(r.code);
        if (!(c == lin)) throw DomainError("internal: GPM and linear intersections differ");
        j["intersection"] = code_json(c, &r.code, bud);
        j["T"] = rows(r.T);
        j["Q"] = rows(r.Q);
        j["P"] = rows(r.P);
        const MTCode left = o.galois ? galois_dual_code(*A.mt, *o.galois) : *A.mt;
        TrivialIntersectionReport t = trivial_intersection_mt(left, *B.mt);
        Json tj;
        tj["trivial"] = t.trivial;
        tj["factors"] = factors_json(t.factors);
        tj["weighted_sum"] = t.weighted_sum;
        tj["target"] = t.target;
        tj["seed"] = t.seed;
        j["rank_table"] = tj;
    } else {
        j["intersection"] = code_json(lin, nullptr, bud);
        j["trivial"] = lin.dimension() == 0;
    }
    if (o.oracle) {
        j["oracle"] = oracle_json([&] {
            const oracle::CodewordSet left =
                o.galois ? oracle::dual_enum(A.code, *o.galois, bud.oracle) : oracle::enumerate(A.code, bud.oracle);
            return oracle::as_code(oracle::intersect_enum(left, oracle::enumerate(B.code, bud.oracle))) == lin;
        });
    }
    return {j, oracle_disagrees(j) ? 1 : 0};
}

struct CheckOptions {
    std::optional<unsigned> so, dc, lcd, hull;
    bool reversible = false;
    bool reverse = false;
    std::optional<std::string> advisor;
    bool oracle = false;
};

void require_kappa(const Field& f, unsigned k) {
    if (k >= f.degree()) throw DomainError("Galois index " + std::to_string(k) + " out of range [0, " + std::to_string(f.degree()) + ")");
}

Json reverse_json(const CodeBlock& blk, const Budgets& b) {
    Json j;
    j["check"] = "reverse";
    if (blk.mt) {
        MTCode r = reversed_gpm(*blk.mt);
        j["reversed"] = code_json(mt_to_linear(r), &r, b);
    } else {
        j["reversed"] = code_json(reversed(blk.code), nullptr, b);
    }
    return j;
}

Outcome cmd_check(const CodeDocument& doc, const std::string& name, const CheckOptions& o, const Budgets& b) {
    const CodeBlock& blk = doc.get(name);
    const Field& f = doc.field();
    const LinearCode& c = blk.code;
    int code = 0;
    Json j = header("check", doc);
    j["code"] = name;
    j["parameters"] = code_json(c, nullptr, b)["parameters"];
    Json checks = Json::array();

    auto galois_property = [&](Property p, unsigned k) {
        require_kappa(f, k);
        Json r;
        r["check"] = to_string(p);
        r["kappa"] = k;
        const LinearCode hull = galois_hull(c, k);
        bool linear_truth = false;
        switch (p) {
            case Property::self_orthogonal: linear_truth = hull == c; break;
            case Property::dual_containing: linear_truth = c.contains(galois_dual(c, k)); break;
            case Property::lcd: linear_truth = hull.dimension() == 0; break;
            case Property::reversible: break;
        }
        if (blk.mt) {
            PropertyReport pr = property_check(*blk.mt, p, k);
            r["method"] = "gpm";
            r["verdict"] = to_string(pr.verdict);
            if (pr.verdict == Verdict::precondition_unmet) {
                r["reason"] = pr.reason;
                code = 1;
            } else {
                if (pr.verdict == Verdict::holds && !linear_truth) throw DomainError("internal: GPM and linear verdicts differ");
                r["residue"] = rows(*pr.residue);
                if (p == Property::lcd) {
                    r["factors"] = factors_json(pr.factors);
                    r["weighted_sum"] = pr.weighted_sum;
                    r["dimension"] = pr.dimension;
                    r["seed"] = pr.seed;
                }
            }
        } else {
            r["method"] = "linear";
            r["verdict"] = linear_truth ? "true" : "false";
            r["hull_dimension"] = hull.dimension();
        }
        if (o.oracle) {
            r["oracle"] = oracle_json([&] {
                const oracle::CodewordSet e = oracle::enumerate(c, b.oracle);
                const oracle::CodewordSet d = oracle::dual_enum(c, k, b.oracle);
                bool truth = p == Property::self_orthogonal ? subset(e, d)
                             : p == Property::dual_containing ? subset(d, e)
                                                              : oracle::intersect_enum(e, d).size() == 1;
                return truth == linear_truth;
            });
        }
        checks.push_back(r);
    };

    if (o.so) galois_property(Property::self_orthogonal, *o.so);
    if (o.dc) galois_property(Property::dual_containing, *o.dc);
    if (o.lcd) galois_property(Property::lcd, *o.lcd);

    if (o.reversible) {
        Json r;
        r["check"] = "reversible";
        ReversibilityReport rr = reversibility_report(c);
        if (blk.mt) {
            PropertyReport pr = property_check(*blk.mt, Property::reversible);
            r["method"] = "gpm";
            r["verdict"] = to_string(pr.verdict);
            if (pr.verdict == Verdict::precondition_unmet) {
                r["reason"] = pr.reason;
                code = 1;
            } else {
                if ((pr.verdict == Verdict::holds) != rr.reversible) throw DomainError("internal: GPM and linear verdicts differ");
                r["residue"] = rows(*pr.residue);
            }
        } else {
            r["method"] = "linear";
            r["verdict"] = rr.reversible ? "true" : "false";
        }
        r["linear_residue"] = rows(rr.residue);
        r["linear_residue_rank"] = rr.residue_rank;
        r["largest_reversible_subcode"] = rows(rr.largest_reversible_subcode.generator());
        if (o.oracle) {
            r["oracle"] = oracle_json([&] {
                const oracle::CodewordSet e = oracle::enumerate(c, b.oracle);
                const oracle::CodewordSet re = reversed_set(e);
                return (re == e) == rr.reversible &&
                       oracle::as_code(oracle::intersect_enum(e, re)) == rr.largest_reversible_subcode;
            });
        }
        checks.push_back(r);
    }

    if (o.hull) {
        const unsigned k = *o.hull;
        require_kappa(f, k);
        Json r;
        r["check"] = "hull";
        r["kappa"] = k;
        const LinearCode h = galois_hull(c, k);
        if (blk.mt && blk.profile->inverse().frobenius(f.degree() - k) == *blk.profile) {
            MTCode hm = galois_intersect_gpm(*blk.mt, *blk.mt, k).code;
            if (!(mt_to_linear(hm) == h)) throw DomainError("internal: GPM and linear hulls differ");
            r["hull"] = code_json(h, &hm, b);
        } else {
            r["hull"] = code_json(h, nullptr, b);
        }
        if (o.oracle) {
            r["oracle"] = oracle_json([&] {
                const oracle::CodewordSet e = oracle::enumerate(c, b.oracle);
                return oracle::as_code(oracle::intersect_enum(e, oracle::dual_enum(c, k, b.oracle))) == h;
            });
        }
        checks.push_back(r);
    }

    if (o.reverse) checks.push_back(reverse_json(blk, b));

    if (o.advisor) {
        const CodeBlock& other = doc.get(*o.advisor);
        if (!blk.profile || !other.profile) throw DomainError("--advisor needs both codes to carry an MT profile");
        AdvisorReport a = intersection_structure_advisor(c, *blk.profile, other.code, *other.profile, 4096, b.distance);
        Json r;
        r["check"] = "advisor";
        r["other"] = *o.advisor;
        r["intersection"] = code_json(a.intersection, nullptr, b);
        r["d1"] = a.d1.str();
        r["d2"] = a.d2.str();
        r["ell"] = a.ell;
        r["differing_shifts"] = a.differing;
        r["lambda_admits"] = a.lambda_admits;
        r["delta_admits"] = a.delta_admits;
        r["exhaustive"] = a.exhaustive;
        r["candidates_tested"] = a.candidates_tested;
        Json adm = Json::array();
        for (const auto& g : a.admitted) adm.push_back(shift_tuple(f, g));
        r["admitted"] = adm;
        r["cases"] = a.cases;
        r["corollary_applies"] = a.corollary_applies;
        r["differing_blocks"] = a.differing_blocks;
        std::vector<bool> zp(a.zero_projection.begin(), a.zero_projection.end());
        r["zero_projection"] = zp;
        checks.push_back(r);
    }

    j["checks"] = checks;
    for (const auto& r : checks)
        if (oracle_disagrees(r)) code = 1;
    return {j, code};
}

Outcome cmd_dual(const CodeDocument& doc, const std::string& name, unsigned k, bool use_oracle, const Budgets& b) {
    const CodeBlock& blk = doc.get(name);
    require_kappa(doc.field(), k);
    Json j = header("dual", doc);
    j["code"] = name;
    j["kappa"] = k;
    const LinearCode d = galois_dual(blk.code, k);
    if (blk.mt) {
        DualPair dp = galois_dual_gpm(*blk.mt, k);
        MTCode m = MTCode::from_gpm(dp.profile, dp.H);
        if (!(mt_to_linear(m) == d)) throw DomainError("internal: GPM and linear duals differ");
        j["dual"] = code_json(d, &m, b);
        j["dual"]["B"] = rows(dp.B);
    } else {
        j["dual"] = code_json(d, nullptr, b);
    }
    if (use_oracle) j["oracle"] = oracle_json([&] { return oracle::as_code(oracle::dual_enum(blk.code, k, b.oracle)) == d; });
    return {j, oracle_disagrees(j) ? 1 : 0};
}

Outcome cmd_reverse(const CodeDocument& doc, const std::string& name, bool use_oracle, const Budgets& b) {
    const CodeBlock& blk = doc.get(name);
    Json j = header("reverse", doc);
    j["code"] = name;
    Json r = reverse_json(blk, b);
    j["reversed"] = r["reversed"];
    if (use_oracle)
        j["oracle"] = oracle_json([&] {
            return oracle::as_code(reversed_set(oracle::enumerate(blk.code, b.oracle))) == reversed(blk.code);
        });
    return {j, oracle_disagrees(j) ? 1 : 0};
}

// ---------------------------------------------------------------------------
// Text rendering

void render(const Json& v, const std::string& key, int indent, std::ostringstream& os);

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_structured()) return false;
    return true;
}

void render(const Json& v, const std::string& key, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (!v.is_structured()) {
        os << pad << key << ": " << scalar(v) << '\n';
        return;
    }
    if (v.empty()) {
        os << pad << key << ": " << (v.is_array() ? "(none)" : "{}") << '\n';
        return;
    }
    // Lists of numbers or flags go on one line, lists of strings one per line.
    if (is_flat(v) && !v.front().is_string()) {
        os << pad << key << ":";
        for (const auto& x : v) os << ' ' << scalar(x);
        os << '\n';
        return;
    }
    os << pad << key << ":\n";
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) render(x, k, indent + 2, os);
        return;
    }
    for (const auto& x : v) {
        if (!x.is_structured()) {
            os << pad << "  " << scalar(x) << '\n';
        } else {
            os << pad << "  -\n";
            for (const auto& [k, y] : x.items()) render(y, k, indent + 4, os);
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    for (const auto& [k, v] : report.items()) render(v, k, 0, os);
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear and multi-twisted codes over finite fields", "mtcodes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report");

    std::string file, name, other;
    IntersectOptions io;
    CheckOptions co;
    unsigned dual_kappa = 0;
    bool dual_oracle = false, rev_oracle = false;

    auto* info = app.add_subcommand("info", "Parameters, profile, reduced GPM and companion of a code");
    info->add_option("file", file)->required();
    info->add_option("name", name)->required();

    auto* inter = app.add_subcommand("intersect", "Intersection, or Galois-dual intersection, of two codes");
    inter->add_option("file", file)->required();
    inter->add_option("a", name)->required();
    inter->add_option("b", other)->required();
    inter->add_option("--galois", io.galois, "Intersect the kappa-Galois dual of A with B");
    auto* lin = inter->add_flag("--linear", io.linear, "Use generator matrices only");
    inter->add_flag("--mt", io.mt, "Use generator polynomial matrices")->excludes(lin);
    inter->add_flag("--oracle", io.oracle, "Cross-check by enumeration");

    auto* check = app.add_subcommand("check", "Property tests");
    check->add_option("file", file)->required();
    check->add_option("name", name)->required();
    check->add_option("--so", co.so, "Galois self-orthogonal");
    check->add_option("--dc", co.dc, "Galois dual-containing");
    check->add_option("--lcd", co.lcd, "Galois LCD");
    check->add_flag("--reversible", co.reversible, "Reversibility and largest reversible subcode");
    check->add_option("--hull", co.hull, "Galois hull");
    check->add_flag("--reverse", co.reverse, "Reversed code");
    check->add_option("--advisor", co.advisor, "Intersection structure with another MT code");
    check->add_flag("--oracle", co.oracle, "Cross-check by enumeration");

    auto* dual = app.add_subcommand("dual", "Galois dual");
    dual->add_option("file", file)->required();
    dual->add_option("name", name)->required();
    dual->add_option("--galois", dual_kappa, "Galois index (default 0)");
    dual->add_flag("--oracle", dual_oracle, "Cross-check by enumeration");

    auto* rev = app.add_subcommand("reverse", "Reversed code");
    rev->add_option("file", file)->required();
    rev->add_option("name", name)->required();
    rev->add_flag("--oracle", rev_oracle, "Cross-check by enumeration");

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const Budgets b = budgets_from_env();
        const CodeDocument doc = load_document(file);
        Outcome o;
        if (info->parsed()) {
            o = cmd_info(doc, name, b);
        } else if (inter->parsed()) {
            o = cmd_intersect(doc, name, other, io, b);
        } else if (check->parsed()) {
            if (!co.so && !co.dc && !co.lcd && !co.hull && !co.reversible && !co.reverse && !co.advisor) {
                err << "error: check needs at least one of --so, --dc, --lcd, --reversible, --hull, --reverse, --advisor\n";
                return 2;
            }
            o = cmd_check(doc, name, co, b);
        } else if (dual->parsed()) {
            o = cmd_dual(doc, name, dual_kappa, dual_oracle, b);
        } else {
            o = cmd_reverse(doc, name, rev_oracle, b);
        }
        out << (json ? o.report.dump(2) + "\n" : render_text(o.report));
        return o.code;
    } catch (const ParseError& e) {
        err << "error: " << file << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mtc::cli
