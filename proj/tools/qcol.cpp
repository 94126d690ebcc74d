// Command-line front end: quandle validation, braid-action display,
// coloring counting, and the closed-form count verification sweep.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcol/presentation.hpp"

using nlohmann::ordered_json;
using namespace qcol;

namespace {

// Bad flag values (malformed specs, unparsable words) exit 2; domain
// failures (invalid quandles, failed rows, unreadable files) exit 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int parse_positive_int(const std::string& text, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
        throw UsageError("bad " + what + " '" + text + "'");
    }
    return value;
}

int parse_qn_order(const std::string& text) {
    const int n = parse_positive_int(text, "quandle order");
    if (n < 3 || n > 4096) throw UsageError("qN order must be in 3..4096");
    return n;
}

FiniteQuandle resolve_quandle(const std::string& spec) {
    if (spec.rfind("qN:", 0) == 0) return FiniteQuandle::qn(parse_qn_order(spec.substr(3)));
    if (spec.rfind("file:", 0) == 0) return FiniteQuandle::load(spec.substr(5));
    throw UsageError("unknown quandle spec '" + spec + "' (expected qN:<N> or file:<path>)");
}

Presentation resolve_chart(const std::string& spec) {
    if (spec == "t0") return chart_t0();
    if (spec.rfind("t:", 0) == 0) return chart_t(parse_positive_int(spec.substr(2), "chart index"));
    if (spec.rfind("tstar:", 0) == 0) {
        return chart_t_star(parse_positive_int(spec.substr(6), "chart index"));
    }
    if (spec.rfind("file:", 0) == 0) return load_presentation(spec.substr(5));
    throw UsageError("unknown chart spec '" + spec +
                     "' (expected t0, t:<k>, tstar:<k> or file:<path>)");
}

std::vector<int> parse_assign(const std::string& text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        values.push_back(parse_positive_int(text.substr(pos, comma - pos), "assignment value"));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return values;
}

// ---- verify-quandle --------------------------------------------------------

struct AxiomLine {
    const char* label;
    const std::optional<TableDefect>& defect;
};

int run_verify(const std::string& spec, bool as_json) {
    Table table;
    if (spec.rfind("qN:", 0) == 0) {
        table = FiniteQuandle::qn(parse_qn_order(spec.substr(3))).table();
    } else if (spec.rfind("file:", 0) == 0) {
        table = load_table(spec.substr(5));
    } else {
        throw UsageError("unknown quandle spec '" + spec + "'");
    }

    const AxiomReport report = check_table(table);
    const AxiomLine lines[] = {
        {"entries in range", report.out_of_range},
        {"axiom (i) idempotence", report.idempotence},
        {"axiom (ii) right translations bijective", report.right_translation},
        {"axiom (iii) right self-distributivity", report.self_distributivity},
    };

    if (as_json) {
        ordered_json j;
        j["quandle"] = spec;
        j["order"] = table.size();
        j["valid"] = report.valid();
        ordered_json defects = ordered_json::array();
        for (const auto& line : lines) {
            if (line.defect) {
                defects.push_back({{"check", line.label}, {"witness", line.defect->describe()}});
            }
        }
        j["defects"] = defects;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& row : table) {
            for (std::size_t y = 0; y < row.size(); ++y) {
                if (y) std::cout << ' ';
                std::cout << row[y];
            }
            std::cout << '\n';
        }
        for (const auto& line : lines) {
            std::cout << line.label << ": "
                      << (line.defect ? "FAIL (" + line.defect->describe() + ")" : "ok") << "\n";
        }
        std::cout << (report.valid() ? "valid" : "invalid") << "\n";
    }
    return report.valid() ? 0 : 1;
}

// ---- act -------------------------------------------------------------------

int run_act(int rank, const std::string& word_text, const std::string& assign_text,
            const std::string& quandle_spec, bool as_json) {
    BraidWord word;
    try {
        word = parse_braid(word_text, rank);
    } catch (const BraidParseError& e) {
        throw UsageError(e.what());
    }

    if (assign_text.empty()) {
        const GeneratorImage image = act(word);
        if (as_json) {
            ordered_json j;
            j["rank"] = rank;
            j["word"] = word_text;
            ordered_json terms = ordered_json::array();
            for (const Term& t : image.terms) terms.push_back(render(t));
            j["terms"] = terms;
            std::cout << j.dump(2) << "\n";
        } else {
            for (int j = 0; j < rank; ++j) {
                std::cout << "x" << (j + 1) << " -> " << render(image.terms[j]) << "\n";
            }
        }
        return 0;
    }

    if (quandle_spec.empty()) throw UsageError("--assign requires --quandle");
    const FiniteQuandle q = resolve_quandle(quandle_spec);
    const Assignment a{parse_assign(assign_text)};
    if (a.rank() != rank) {
        throw UsageError("--assign needs exactly " + std::to_string(rank) + " values");
    }
    std::vector<int> values;
    try {
        values = act_evaluated(word, a, q);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    if (as_json) {
        ordered_json j;
        j["rank"] = rank;
        j["word"] = word_text;
        j["quandle"] = quandle_spec;
        j["assign"] = a.values;
        j["values"] = values;
        std::cout << j.dump(2) << "\n";
    } else {
        for (int j = 0; j < rank; ++j) {
            std::cout << "x" << (j + 1) << " -> " << values[j] << "\n";
        }
    }
    return 0;
}

// ---- count -----------------------------------------------------------------

int run_count(const std::string& chart_spec, const std::string& quandle_spec, bool list,
              bool as_json, int workers) {
    const Presentation p = resolve_chart(chart_spec);
    const FiniteQuandle q = resolve_quandle(quandle_spec);
    const ColoringReport report = count_colorings(p, q, workers);

    if (as_json) {
        ordered_json j;
        j["chart"] = chart_spec;
        j["quandle"] = quandle_spec;
        j["count"] = report.count;
        j["trivial_count"] = report.trivial_count;
        if (list) {
            ordered_json colorings = ordered_json::array();
            for (const Assignment& a : report.colorings) colorings.push_back(a.values);
            j["colorings"] = colorings;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chart: " << chart_spec << "\n";
        std::cout << "quandle: " << quandle_spec << "\n";
        std::cout << "count: " << report.count << "\n";
        std::cout << "trivial: " << report.trivial_count << "\n";
        if (list) {
            for (const Assignment& a : report.colorings) {
                for (int i = 0; i < a.rank(); ++i) {
                    if (i) std::cout << ' ';
                    std::cout << a.values[i];
                }
                std::cout << '\n';
            }
        }
    }
    return 0;
}

// ---- theorem-check ---------------------------------------------------------

struct TheoremRow {
    std::string law;
    std::string chart;
    std::string quandle;
    std::uint64_t expected = 0;
    std::uint64_t computed = 0;
    bool pass = false;
};

TheoremRow make_row(const std::string& law, const std::string& chart_spec, int order,
                    std::uint64_t expected, int workers) {
    TheoremRow row;
    row.law = law;
    row.chart = chart_spec;
    row.quandle = "qN:" + std::to_string(order);
    row.expected = expected;
    row.computed =
        count_colorings(resolve_chart(chart_spec), FiniteQuandle::qn(order), workers).count;
    row.pass = row.computed == row.expected;
    return row;
}

int run_theorem_check(int max_k, int max_n, int workers, bool as_json) {
    if (max_k < 1 || max_n < 3) throw UsageError("need --max-k >= 1 and --max-N >= 3");
    std::vector<TheoremRow> rows;

    auto u64 = [](int v) { return static_cast<std::uint64_t>(v); };
    for (int n = 3; n <= max_n; ++n) {
        rows.push_back(make_row("(a)", "t0", n, u64((n - 1) * (n - 1) + 1), workers));
    }
    for (int k = 1; k <= max_k; ++k) {
        for (int n = 3; n <= max_n; ++n) {
            rows.push_back(make_row("(b)", "t:" + std::to_string(2 * k), n, u64(n), workers));
            rows.push_back(make_row("(b)", "tstar:" + std::to_string(2 * k), n, u64(n), workers));
        }
    }
    for (int k = 1; k <= max_k; ++k) {
        const std::uint64_t expected = u64((k + 2) * (k + 2));
        const std::string suffix = std::to_string(2 * k - 1);
        rows.push_back(make_row("(c)", "t:" + suffix, k + 2, expected, workers));
        rows.push_back(make_row("(c)", "tstar:" + suffix, k + 2, expected, workers));
    }
    for (int k = 2; k <= max_k; ++k) {
        for (int l = 1; l < k; ++l) {
            const std::uint64_t expected = u64((k + 1) * (k + 1) + 1);
            const std::string suffix = std::to_string(2 * l - 1);
            rows.push_back(make_row("(d)", "t:" + suffix, k + 2, expected, workers));
            rows.push_back(make_row("(d)", "tstar:" + suffix, k + 2, expected, workers));
        }
    }

    std::size_t failed = 0;
    for (const TheoremRow& row : rows) {
        if (!row.pass) ++failed;
    }

    if (as_json) {
        ordered_json j;
        ordered_json out_rows = ordered_json::array();
        for (const TheoremRow& row : rows) {
            out_rows.push_back({{"law", row.law},
                                {"chart", row.chart},
                                {"quandle", row.quandle},
                                {"expected", row.expected},
                                {"computed", row.computed},
                                {"pass", row.pass}});
        }
        j["rows"] = out_rows;
        j["all_pass"] = failed == 0;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const TheoremRow& row : rows) {
            std::cout << row.law << " chart=" << row.chart << " quandle=" << row.quandle
                      << " expected=" << row.expected << " computed=" << row.computed << " "
                      << (row.pass ? "PASS" : "FAIL") << "\n";
        }
        if (failed == 0) {
            std::cout << "all " << rows.size() << " rows pass\n";
        } else {
            std::cout << failed << " of " << rows.size() << " rows FAILED\n";
        }
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quandle colorings of chart-presented surface-link quandles"};
    app.require_subcommand(1);

    std::string quandle_spec;
    std::string chart_spec;
    std::string word_text;
    std::string assign_text;
    int rank = 0;
    int workers = 1;
    int max_k = 5;
    int max_n = 6;
    bool list = false;
    bool as_json = false;

    CLI::App* verify = app.add_subcommand("verify-quandle", "Check a table against the axioms");
    verify->add_option("--quandle", quandle_spec, "qN:<N> or file:<path>")->required();
    verify->add_flag("--json", as_json, "JSON output");

    CLI::App* act_cmd = app.add_subcommand("act", "Show how a braid word moves the generators");
    act_cmd->add_option("--rank", rank, "strand count")->required()->check(CLI::Range(1, 4096));
    act_cmd->add_option("--word", word_text, "braid word, e.g. \"s2^-2 s1\"")->required();
    act_cmd->add_option("--assign", assign_text, "comma-separated generator values");
    act_cmd->add_option("--quandle", quandle_spec, "qN:<N> or file:<path>");
    act_cmd->add_flag("--json", as_json, "JSON output");

    CLI::App* count = app.add_subcommand("count", "Count colorings of a chart presentation");
    count->add_option("--chart", chart_spec, "t0, t:<k>, tstar:<k> or file:<path>")->required();
    count->add_option("--quandle", quandle_spec, "qN:<N> or file:<path>")->required();
    count->add_flag("--list", list, "list the colorings");
    count->add_flag("--json", as_json, "JSON output");
    count->add_option("--workers", workers, "enumeration threads")->check(CLI::PositiveNumber);

    CLI::App* theorem = app.add_subcommand("theorem-check", "Verify the closed-form count table");
    theorem->add_option("--max-k", max_k, "largest tangle index (default 5)");
    theorem->add_option("--max-N", max_n, "largest quandle order (default 6)");
    theorem->add_option("--workers", workers, "enumeration threads")->check(CLI::PositiveNumber);
    theorem->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(quandle_spec, as_json);
        if (act_cmd->parsed()) return run_act(rank, word_text, assign_text, quandle_spec, as_json);
        if (count->parsed()) return run_count(chart_spec, quandle_spec, list, as_json, workers);
        return run_theorem_check(max_k, max_n, workers, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
