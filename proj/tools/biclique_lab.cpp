#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "biclab/biclique.hpp"
#include "biclab/conjecture.hpp"
#include "biclab/distance.hpp"
#include "biclab/errors.hpp"
#include "biclab/graph6.hpp"
#include "biclab/json_io.hpp"
#include "biclab/obstruction.hpp"
#include "biclab/parallel.hpp"
#include "biclab/recognition.hpp"

namespace fs = std::filesystem;
using namespace biclab;

namespace {

enum Exit : int {
    kOk = 0,
    kParseFailure = 1,
    kCapabilityFailure = 2,
    kFixtureMismatch = 3,
    kNegativeFound = 4,
    kCounterexampleFound = 5,
};

struct Options {
    std::string input = "-";
    std::string format;
    std::string out;
    std::string fixture;
    int max_g_order = 6;
    int max_h_order = kDefaultMaxPreimageOrder;
    int i_max = 3;
    std::string reading = "contained-in-clique";
    unsigned workers = 0;
    bool strict = false;
    bool invert = false;
};

unsigned resolve_workers(const Options& opt, bool corpus_command) {
    if (opt.workers > 0) return opt.workers;
    if (const char* env = std::getenv("BICLIQUE_LAB_WORKERS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring BICLIQUE_LAB_WORKERS=" << env << "\n";
    }
    return corpus_command ? default_workers() : 1;
}

std::string join(VertexSet s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (Vertex v : vs) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

/// Streams graph6 lines through `handle`; per-line failures are reported with
/// their line number and the first one decides the exit status.
class LineRunner {
public:
    explicit LineRunner(const std::string& input) : input_(input) {}

    template <typename Handle>
    int run(Handle&& handle) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (input_ != "-") {
            file.open(input_);
            if (!file) {
                std::cerr << "error: cannot open " << input_ << "\n";
                return kParseFailure;
            }
            in = &file;
        }
        for_each_graph6_line(*in, [&](const Graph6Line& line) {
            try {
                handle(parse_graph6(line.text), line);
            } catch (const ParseError& e) {
                fail(line, e.what(), kParseFailure);
            } catch (const CapabilityError& e) {
                fail(line, e.what(), kCapabilityFailure);
            } catch (const DomainError& e) {
                fail(line, e.what(), kParseFailure);
            }
        });
        return status_;
    }

    int status() const { return status_; }

private:
    void fail(const Graph6Line& line, const std::string& what, int code) {
        std::cerr << "line " << line.line_number << ": " << what << "\n";
        if (status_ == kOk) status_ = code;
    }

    std::string input_;
    int status_ = kOk;
};

int cmd_bicliques(const Options& opt) {
    const std::string format = opt.format.empty() ? "tsv" : opt.format;
    return LineRunner(opt.input).run([&](const Graph& g, const Graph6Line& line) {
        const auto [kb, family] = biclique_graph(g);
        if (format == "json") {
            std::cout << to_json(family, kb).dump() << "\n";
        } else if (format == "graph6") {
            std::cout << write_graph6(kb) << "\n";
        } else {
            std::cout << "# " << line.text << "\n";
            for (int i = 0; i < family.size(); ++i) {
                std::cout << i << '\t' << join(family[i].vertices) << '\t' << join(family[i].side_a) << '\t'
                          << join(family[i].side_b) << "\n";
            }
            std::cout << "kb\t" << write_graph6(kb) << "\n";
        }
    });
}

int cmd_kb(const Options& opt) {
    const std::string format = opt.format.empty() ? "graph6" : opt.format;
    return LineRunner(opt.input).run([&](const Graph& g, const Graph6Line&) {
        const auto [kb, family] = biclique_graph(g);
        if (format == "json") {
            std::cout << to_json(family, kb).dump() << "\n";
        } else if (format == "tsv") {
            std::cout << "kb\t" << write_graph6(kb) << "\n";
            for (int i = 0; i < family.size(); ++i) std::cout << i << '\t' << join(family[i].vertices) << "\n";
        } else {
            std::cout << write_graph6(kb) << "\n";
        }
    });
}

int cmd_distance(const Options& opt) {
    const std::string format = opt.format.empty() ? "tsv" : opt.format;
    if (format == "graph6") {
        std::cerr << "error: distance has no graph6 output\n";
        return kParseFailure;
    }
    bool violated = false;
    const int status = LineRunner(opt.input).run([&](const Graph& g, const Graph6Line& line) {
        const auto [kb, family] = biclique_graph(g);
        if (format == "tsv") std::cout << "# " << line.text << "\ni\tj\td_g\td_kb\tformula_value\twitness_count\n";
        for (const auto& r : verify_distance_formula(family, kb)) {
            const int witnesses =
                r.d_g > 0 ? static_cast<int>(find_witnesses(family, r.b_index, r.b_prime_index).witnesses.size()) : 0;
            if (!r.holds()) {
                violated = true;
                std::cerr << "line " << line.line_number << ": distance formula fails for bicliques " << r.b_index
                          << " and " << r.b_prime_index << "\n";
            }
            if (format == "json") {
                auto j = to_json(r, witnesses);
                j["graph"] = line.text;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << r.b_index << '\t' << r.b_prime_index << '\t' << r.d_g << '\t' << r.d_kb << '\t'
                          << r.formula_value << '\t' << witnesses << "\n";
            }
        }
    });
    if (status != kOk) return status;
    return violated ? kCounterexampleFound : kOk;
}

int cmd_check(const Options& opt) {
    const std::string format = opt.format.empty() ? "json" : opt.format;
    bool flagged = false;
    const int status = LineRunner(opt.input).run([&](const Graph& g, const Graph6Line& line) {
        const ObstructionReport report = classify(g);
        const bool negative = report.cannot_be_biclique_graph();
        if (negative != opt.invert) flagged = true;
        if (format == "graph6") {
            if (negative == opt.invert) std::cout << line.text << "\n";
        } else if (format == "tsv") {
            std::cout << line.text << '\t' << (negative ? "negative" : "open");
            for (Check c : report.failing()) std::cout << '\t' << check_name(c);
            std::cout << "\n";
        } else {
            std::cout << to_json(g, report).dump() << "\n";
        }
    });
    if (status != kOk) return status;
    return flagged ? kNegativeFound : kOk;
}

std::string evidence(const CatalogueEntry& e) {
    if (e.preimage) return "preimage=" + write_graph6(*e.preimage);
    if (e.obstruction) return std::string(check_name(e.obstruction->check)) + "=" + join(e.obstruction->witness);
    return "searched<=" + std::to_string(e.max_h_order);
}

int cmd_recognize(const Options& opt) {
    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (opt.max_h_order < 2 || opt.max_h_order > kMaxPreimageOrder) {
        std::cerr << "error: --max-h-order must lie in 2.." << kMaxPreimageOrder << "\n";
        return kCapabilityFailure;
    }
    return LineRunner(opt.input).run([&](const Graph& g, const Graph6Line& line) {
        const CatalogueEntry e = recognize(g, opt.max_h_order);
        if (format == "tsv") {
            std::cout << line.text << '\t' << classification_name(e.classification) << '\t' << evidence(e) << "\n";
        } else if (format == "graph6") {
            if (e.classification == Classification::kBicliqueGraph) std::cout << line.text << "\n";
        } else {
            auto j = to_json(e);
            j["input"] = line.text;
            std::cout << j.dump() << "\n";
        }
    });
}

std::vector<Graph> read_fixture(const std::string& path) {
    std::ifstream in(path);
    std::vector<Graph> graphs;
    for_each_graph6_line(in, [&](const Graph6Line& line) {
        try {
            graphs.push_back(parse_graph6(line.text));
        } catch (const ParseError& e) {
            throw ParseError(path + " line " + std::to_string(line.line_number) + ": " + e.what(), e.offset());
        }
    });
    return graphs;
}

int cmd_catalogue(const Options& opt) {
    if (opt.max_g_order < 2 || opt.max_g_order > kMaxCanonicalOrder || opt.max_h_order < 2 ||
        opt.max_h_order > kMaxPreimageOrder) {
        std::cerr << "error: bounds outside the supported regime (--max-g-order 2.." << kMaxCanonicalOrder
                  << ", --max-h-order 2.." << kMaxPreimageOrder << ")\n";
        return kCapabilityFailure;
    }
    const fs::path out = opt.out.empty() ? fs::path("catalogue") : fs::path(opt.out);
    const unsigned workers = resolve_workers(opt, true);
    const auto entries = build_catalogue(opt.max_g_order, opt.max_h_order, workers);

    fs::create_directories(out);
    std::map<int, std::ofstream> files;
    std::map<int, std::array<int, 3>> counts;
    for (const auto& e : entries) {
        const int n = e.graph.order();
        auto [it, fresh] = files.try_emplace(n);
        if (fresh) it->second.open(out / ("order-" + std::to_string(n) + ".jsonl"), std::ios::trunc);
        it->second << to_json(e).dump() << "\n";
        ++counts[n][static_cast<int>(e.classification)];
    }

    std::cout << "order\tbiclique-graph\tnot-biclique-graph\tunknown-within-bound\n";
    for (const auto& [n, c] : counts) std::cout << n << '\t' << c[0] << '\t' << c[1] << '\t' << c[2] << "\n";

    if (opt.fixture.empty()) {
        if (opt.max_g_order == 6) {
            std::cerr << "warning: no --fixture given; comparison skipped\n";
            if (opt.strict) return kFixtureMismatch;
        }
        return kOk;
    }
    if (!fs::exists(opt.fixture)) {
        std::cerr << "warning: fixture " << opt.fixture << " not found; comparison skipped\n";
        return opt.strict ? kFixtureMismatch : kOk;
    }
    std::vector<Graph> fixture;
    for (const Graph& g : read_fixture(opt.fixture)) {
        if (g.order() <= opt.max_g_order) fixture.push_back(g);
    }
    const FixtureComparison cmp = compare_with_fixture(entries, fixture);
    for (const Graph& g : cmp.missing) {
        std::cerr << "fixture graph without a preimage within " << opt.max_h_order << " vertices: " << write_graph6(g)
                  << "\n";
    }
    for (const Graph& g : cmp.unexpected) std::cerr << "positive graph absent from fixture: " << write_graph6(g) << "\n";
    std::cout << "fixture\t" << (cmp.matches() ? "match" : "mismatch") << '\t' << fixture.size() << " graphs\n";
    return cmp.matches() ? kOk : kFixtureMismatch;
}

std::vector<std::string> catalogue_lines(const std::string& input) {
    std::vector<fs::path> files;
    if (fs::is_directory(input)) {
        for (const auto& entry : fs::directory_iterator(input)) {
            if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(input);
    }
    std::vector<std::string> lines;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path.string());
        for (std::string line; std::getline(in, line);) {
            if (!line.empty()) lines.push_back(line);
        }
    }
    return lines;
}

int cmd_conjectures(const Options& opt) {
    const auto reading = clique_reading_from_name(opt.reading);
    if (!reading) {
        std::cerr << "error: unknown reading " << opt.reading << "\n";
        return kParseFailure;
    }
    std::vector<CatalogueEntry> entries;
    int status = kOk;
    const auto lines = catalogue_lines(opt.input);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            entries.push_back(catalogue_entry_from_json(nlohmann::json::parse(lines[i])));
        } catch (const std::exception& e) {
            std::cerr << "record " << i + 1 << ": " << e.what() << "\n";
            status = kParseFailure;
        }
    }
    if (status != kOk) return status;

    std::vector<std::array<ConjectureFinding, 3>> findings(entries.size());
    parallel_for(entries.size(), resolve_workers(opt, true), [&](std::size_t i) {
        const Graph& g = entries[i].graph;
        const bool certified = entries[i].classification == Classification::kBicliqueGraph;
        findings[i] = {check_simplicial_helly(g, certified), check_generalized_twins(g, opt.i_max, certified, *reading),
                       check_hamiltonian(g, certified)};
    });

    std::ofstream file;
    if (!opt.out.empty()) file.open(opt.out, std::ios::trunc);
    std::ostream& stream = opt.out.empty() ? std::cout : file;
    std::ostream& summary = opt.out.empty() ? std::cerr : std::cout;

    std::map<Conjecture, std::array<int, 4>> table;
    bool counterexample = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (const auto& f : findings[i]) {
            stream << to_json(f).dump() << "\n";
            auto& row = table[f.conjecture];
            if (entries[i].classification == Classification::kBicliqueGraph) ++row[0];
            ++row[1 + static_cast<int>(f.verdict)];
            if (f.verdict == FindingVerdict::kCounterexample) {
                counterexample = true;
                std::cerr << "counterexample to " << conjecture_name(f.conjecture) << ": " << f.graph6 << " witness "
                          << join(f.witness) << "\n";
            }
        }
    }
    summary << "conjecture\tcertified\tconsistent\tcounterexample\tnot_applicable\n";
    for (const auto& [c, row] : table) {
        summary << conjecture_name(c) << '\t' << row[0] << '\t' << row[1] << '\t' << row[2] << '\t' << row[3] << "\n";
    }
    return counterexample ? kCounterexampleFound : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicliques, biclique graphs and their recognition on small graphs"};
    app.require_subcommand(1);
    Options opt;

    const auto formats = CLI::IsMember({"tsv", "json", "graph6"});
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "graph6 file, '-' for stdin")->capture_default_str();
        sub->add_option("--format", opt.format, "tsv, json or graph6")->check(formats);
    };

    auto* bicliques = app.add_subcommand("bicliques", "List the bicliques of each graph and its biclique graph");
    add_common(bicliques);
    auto* kb = app.add_subcommand("kb", "Emit the biclique graph of each graph");
    add_common(kb);
    auto* distance = app.add_subcommand("distance", "Biclique distances against distances in the biclique graph");
    add_common(distance);
    auto* check = app.add_subcommand("check", "Run the obstruction battery");
    add_common(check);
    check->add_flag("--invert", opt.invert, "Exit nonzero when a graph is not ruled out instead");
    auto* recognize_cmd = app.add_subcommand("recognize", "Search for a preimage of each graph");
    add_common(recognize_cmd);
    recognize_cmd->add_option("--max-h-order", opt.max_h_order, "Largest preimage order searched")
        ->capture_default_str();

    auto* catalogue = app.add_subcommand("catalogue", "Classify every connected graph up to a given order");
    catalogue->add_option("--max-g-order", opt.max_g_order, "Largest graph order catalogued")->capture_default_str();
    catalogue->add_option("--max-h-order", opt.max_h_order, "Largest preimage order searched")->capture_default_str();
    catalogue->add_option("--out", opt.out, "Output directory for order-N.jsonl files (default: catalogue)");
    catalogue->add_option("--fixture", opt.fixture, "graph6 list of expected biclique graphs");
    catalogue->add_flag("--strict", opt.strict, "Treat warnings as errors");

    auto* conjectures = app.add_subcommand("conjectures", "Scan a catalogue for counterexamples");
    conjectures->add_option("input", opt.input, "Catalogue directory or .jsonl file")->required();
    conjectures->add_option("--out", opt.out, "Findings file (default: stdout, summary on stderr)");
    conjectures->add_option("--i-max", opt.i_max, "Largest twin-group size")->capture_default_str()->check(
        CLI::Range(2, 64));
    conjectures->add_option("--reading", opt.reading,
                            "contained-in-clique, contained-in-maximal-clique or induces-clique")
        ->capture_default_str();

    for (auto* sub : {bicliques, kb, distance, check, recognize_cmd, catalogue, conjectures}) {
        sub->add_option("--workers", opt.workers, "Worker threads (overrides BICLIQUE_LAB_WORKERS)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bicliques) return cmd_bicliques(opt);
        if (*kb) return cmd_kb(opt);
        if (*distance) return cmd_distance(opt);
        if (*check) return cmd_check(opt);
        if (*recognize_cmd) return cmd_recognize(opt);
        if (*catalogue) return cmd_catalogue(opt);
        if (*conjectures) return cmd_conjectures(opt);
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapabilityFailure;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    }
    return kOk;
}
