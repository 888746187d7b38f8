#include "wjf/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wjf/catalog.hpp"
#include "wjf/mde.hpp"
#include "wjf/render.hpp"

namespace wjf::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

void emit_json(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << "\n";
}

int emit_error(bool json, std::ostream& out, std::ostream& err,
               const char* type, const std::string& message, int code) {
    if (json) {
        ordered_json j;
        j["error"]["type"] = type;
        j["error"]["message"] = message;
        emit_json(out, j);
    }
    err << "error: " << message << "\n";
    return code;
}

// Usage problems exit 2; bad data (inconsistent input, insufficient
// truncation, failed solves) exits 1.
template <typename Fn>
int guarded(bool json, std::ostream& out, std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UnknownFormError& e) {
        return emit_error(json, out, err, "usage", e.what(), kExitUsage);
    } catch (const std::invalid_argument& e) {
        return emit_error(json, out, err, "usage", e.what(), kExitUsage);
    } catch (const InconsistentHodgeError& e) {
        return emit_error(json, out, err, "data", e.what(), kExitData);
    } catch (const NotInSpanError& e) {
        return emit_error(json, out, err, "data", e.what(), kExitData);
    } catch (const UnderdeterminedError& e) {
        return emit_error(json, out, err, "data", e.what(), kExitData);
    } catch (const InsufficientTruncationError& e) {
        return emit_error(json, out, err, "data", e.what(), kExitData);
    }
}

std::int64_t doubled_from_fraction(const std::string& text, const char* what) {
    const Rational r = parse_rational(text);
    const Rational doubled = r * 2;
    if (!is_integer(doubled))
        throw std::invalid_argument(std::string(what) +
                                    " must be integral or half-integral");
    return static_cast<std::int64_t>(doubled.get_num().get_si());
}

std::string status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass: return "PASS";
        case VerifyStatus::Fail: return "FAIL";
        case VerifyStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string certificate_detail(const VerifyResult& r) {
    switch (r.status) {
        case VerifyStatus::Pass:
            return "zero below " +
                   q_exponent_string(r.certificate.vanish_order24) +
                   " (required " +
                   q_exponent_string(r.certificate.required_bound24) + ")";
        case VerifyStatus::Fail:
            return "nonzero at " +
                   q_exponent_string(r.certificate.vanish_order24);
        case VerifyStatus::Inconclusive:
            return "computed only to " +
                   q_exponent_string(r.certificate.vanish_order24) +
                   ", required " +
                   q_exponent_string(r.certificate.required_bound24);
    }
    return "";
}

std::string modular_monomial_name(std::int64_t a, std::int64_t b) {
    std::string s;
    if (a > 0) s += a == 1 ? "E4" : "E4^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += "*";
        s += b == 1 ? "E6" : "E6^" + std::to_string(b);
    }
    return s.empty() ? "1" : s;
}

std::string coefficient_line(const std::vector<Rational>& coords,
                             std::int64_t weight2) {
    const auto mons = modular_monomials(weight2);
    std::string s;
    for (std::size_t j = 0; j < mons.size(); ++j) {
        if (coords[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += plain_string(coords[j]) + "*" +
             modular_monomial_name(mons[j].first, mons[j].second);
    }
    return s.empty() ? "0" : s;
}

int run_expand(const std::string& name, int q_order, bool json,
               std::ostream& out) {
    const QZSeries s = form(name, 24 * q_order);
    if (json) {
        emit_json(out, series_to_json(s));
    } else {
        for (const auto& line : series_lines(s)) out << line << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& equation_id, int q_order, bool json,
               std::ostream& out) {
    std::vector<const LedgerEntry*> entries;
    if (equation_id.empty()) {
        for (const auto& e : ledger()) entries.push_back(&e);
    } else {
        const LedgerEntry* e = find_ledger_entry(equation_id);
        if (e == nullptr)
            throw std::invalid_argument("unknown ledger entry: " + equation_id);
        entries.push_back(e);
    }

    bool all_pass = true;
    ordered_json rows = ordered_json::array();
    for (const LedgerEntry* e : entries) {
        const VerifyResult r = verify_equation(*e, 24 * q_order);
        all_pass = all_pass && r.status == VerifyStatus::Pass;
        if (json) {
            ordered_json row;
            row["id"] = r.id;
            row["status"] = status_name(r.status);
            row["weight2"] = r.certificate.weight2;
            row["index2"] = r.certificate.index2;
            row["vanish_order24"] = r.certificate.vanish_order24;
            row["required_bound24"] = r.certificate.required_bound24;
            row["note"] = r.note;
            rows.push_back(std::move(row));
        } else {
            std::ostringstream line;
            line << std::left << std::setw(13) << status_name(r.status)
                 << std::setw(34) << r.id << certificate_detail(r);
            if (!r.note.empty()) line << "  [" << r.note << "]";
            out << line.str() << "\n";
        }
    }
    if (json) emit_json(out, rows);
    return all_pass ? kExitOk : kExitData;
}

int run_discover(const std::string& name, int max_degree, int q_order,
                 bool json, std::ostream& out) {
    const DiscoveryOutcome outcome = discover(name, max_degree, 24 * q_order);

    if (json) {
        ordered_json j;
        j["form"] = name;
        j["inconclusive"] = outcome.inconclusive;
        j["message"] = outcome.message;
        auto infeasible = ordered_json::array();
        for (const auto& rep : outcome.infeasible) {
            ordered_json r;
            r["degree"] = rep.degree;
            r["unknowns"] = rep.unknowns;
            r["rank"] = rep.rank;
            r["rows"] = rep.rows;
            infeasible.push_back(std::move(r));
        }
        j["infeasible"] = std::move(infeasible);
        if (outcome.equation) {
            const MDEquation& eq = *outcome.equation;
            ordered_json je;
            je["degree"] = eq.degree;
            je["unique"] = eq.unique;
            auto coeffs = ordered_json::array();
            for (int i = 2; i <= eq.degree; ++i) {
                ordered_json c;
                c["weight"] = 2 * i;
                auto parts = ordered_json::array();
                const auto mons = modular_monomials(4 * i);
                for (std::size_t m = 0; m < mons.size(); ++m) {
                    ordered_json p;
                    p["monomial"] =
                        modular_monomial_name(mons[m].first, mons[m].second);
                    p["c"] = fraction_string(
                        eq.coeffs[static_cast<std::size_t>(i - 2)][m]);
                    parts.push_back(std::move(p));
                }
                c["terms"] = std::move(parts);
                coeffs.push_back(std::move(c));
            }
            je["coeffs"] = std::move(coeffs);
            j["equation"] = std::move(je);
        } else {
            j["equation"] = nullptr;
        }
        emit_json(out, j);
    } else {
        for (const auto& rep : outcome.infeasible)
            out << "degree " << rep.degree << ": infeasible (" << rep.unknowns
                << " unknowns, rank " << rep.rank << ", " << rep.rows
                << " conditions)\n";
        if (outcome.inconclusive) {
            out << "inconclusive: " << outcome.message << "\n";
        } else if (outcome.equation) {
            const MDEquation& eq = *outcome.equation;
            out << "degree " << eq.degree << ": monic heat-operator equation"
                << (eq.unique ? "" : " (solution space has extra directions)")
                << "\n";
            for (int i = 2; i <= eq.degree; ++i)
                out << "  g_" << 2 * i << " = "
                    << coefficient_line(
                           eq.coeffs[static_cast<std::size_t>(i - 2)], 4 * i)
                    << "\n";
            out << "certified zero below "
                << q_exponent_string(eq.certificate.vanish_order24)
                << " (required "
                << q_exponent_string(eq.certificate.required_bound24) << ")\n";
        } else {
            out << "no equation up to degree " << max_degree << "\n";
        }
    }
    return outcome.inconclusive ? kExitData : kExitOk;
}

int run_genus(int dim, const std::string& euler_text,
              const std::string& chi_text, int q_order, bool json,
              std::ostream& out) {
    GenusInput input;
    input.dim = dim;
    if (!euler_text.empty()) input.euler = parse_rational(euler_text);
    if (!chi_text.empty()) {
        std::vector<Rational> chi;
        std::stringstream ss(chi_text);
        std::string item;
        while (std::getline(ss, item, ',')) chi.push_back(parse_rational(item));
        input.chi = std::move(chi);
    }
    if (!input.euler && !input.chi)
        throw std::invalid_argument("genus needs --euler or --chi");

    const GenusResult res = elliptic_genus(input, 24 * q_order);
    if (json) {
        ordered_json j;
        j["dim"] = dim;
        j["series"] = series_to_json(res.series);
        auto coords = ordered_json::array();
        for (std::size_t i = 0; i < res.coords.size(); ++i) {
            ordered_json c;
            c["monomial"] = res.space.monomials[i].name();
            c["c"] = fraction_string(res.coords[i]);
            coords.push_back(std::move(c));
        }
        j["coordinates"] = std::move(coords);
        j["integral"] = res.integral;
        j["warnings"] = res.warnings;
        emit_json(out, j);
    } else {
        for (const auto& line : series_lines(res.series)) out << line << "\n";
        out << "coordinates:\n";
        for (std::size_t i = 0; i < res.coords.size(); ++i)
            out << "  " << res.space.monomials[i].name() << ": "
                << plain_string(res.coords[i]) << "\n";
        for (const auto& w : res.warnings) out << "warning: " << w << "\n";
    }
    return kExitOk;
}

int run_basis(const std::string& weight_text, const std::string& index_text,
              bool json, std::ostream& out) {
    const std::int64_t weight2 = doubled_from_fraction(weight_text, "weight");
    const std::int64_t index2 = doubled_from_fraction(index_text, "index");
    if (index2 < 0) throw std::invalid_argument("index must be >= 0");
    const JacobiBasis b = basis(weight2, index2);
    if (json) {
        ordered_json j;
        j["weight2"] = weight2;
        j["index2"] = index2;
        j["dimension"] = b.dimension();
        auto mons = ordered_json::array();
        for (const auto& mon : b.monomials) mons.push_back(mon.name());
        j["monomials"] = std::move(mons);
        emit_json(out, j);
    } else {
        out << "J_{" << plain_string(frac(weight2, 2)) << ","
            << plain_string(frac(index2, 2)) << "}: dimension "
            << b.dimension() << "\n";
        for (const auto& mon : b.monomials) out << "  " << mon.name() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact q,zeta-expansions of weak Jacobi forms, heat-operator "
                 "differential equations, and elliptic genera"};
    app.name("wjf");

    int q_order = 12;
    bool json = false;
    std::string form_name;
    std::string equation_id;
    bool verify_all = false;
    int max_degree = 1;
    int dim = 0;
    std::string euler_text;
    std::string chi_text;
    std::string weight_text;
    std::string index_text;

    const auto add_common = [&](CLI::App* cmd, bool with_q_order = true) {
        if (with_q_order)
            cmd->add_option("--q-order", q_order,
                            "number of complete integer q-orders (trunc24 = "
                            "24*q_order)")
                ->check(CLI::PositiveNumber);
        cmd->add_flag("--json", json, "JSON output on stdout");
    };

    CLI::App* expand = app.add_subcommand("expand", "print a catalog form");
    expand->add_option("--form", form_name, "catalog form name")->required();
    add_common(expand);

    CLI::App* verify =
        app.add_subcommand("verify", "verify ledger equations with vanishing "
                                     "certificates");
    verify->add_flag("--all", verify_all, "verify the whole ledger (default)");
    verify->add_option("--equation", equation_id, "single ledger entry id");
    add_common(verify);

    CLI::App* discover_cmd = app.add_subcommand(
        "discover", "search for the minimal-degree heat-operator equation");
    discover_cmd->add_option("--form", form_name, "catalog form name")
        ->required();
    discover_cmd->add_option("--max-degree", max_degree, "highest degree to try")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(discover_cmd);

    CLI::App* genus = app.add_subcommand(
        "genus", "elliptic genus of a Calabi-Yau d-fold from Euler/Hodge data");
    genus->add_option("--dim", dim, "complex dimension (2..12)")->required();
    genus->add_option("--euler", euler_text, "Euler number (rational)");
    genus->add_option("--chi", chi_text,
                      "comma-separated chi_0,...,chi_d (rationals)");
    add_common(genus);

    CLI::App* basis_cmd =
        app.add_subcommand("basis", "structure-theorem basis of J_{k,m}");
    basis_cmd
        ->add_option("--weight", weight_text, "weight k (fractions allowed)")
        ->required();
    basis_cmd->add_option("--index", index_text, "index m (fractions allowed)")
        ->required();
    add_common(basis_cmd, /*with_q_order=*/false);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("wjf");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (expand->parsed())
        return guarded(json, out, err,
                       [&] { return run_expand(form_name, q_order, json, out); });
    if (verify->parsed()) {
        if (verify_all && !equation_id.empty())
            return emit_error(json, out, err, "usage",
                              "--all and --equation are mutually exclusive",
                              kExitUsage);
        return guarded(json, out, err, [&] {
            return run_verify(equation_id, q_order, json, out);
        });
    }
    if (discover_cmd->parsed())
        return guarded(json, out, err, [&] {
            return run_discover(form_name, max_degree, q_order, json, out);
        });
    if (genus->parsed())
        return guarded(json, out, err, [&] {
            return run_genus(dim, euler_text, chi_text, q_order, json, out);
        });
    if (basis_cmd->parsed())
        return guarded(json, out, err, [&] {
            return run_basis(weight_text, index_text, json, out);
        });
    return kExitUsage;
}

}  // namespace wjf::cli
