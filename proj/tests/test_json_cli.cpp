#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "biclab/biclique.hpp"
#include "biclab/conjecture.hpp"
#include "biclab/distance.hpp"
#include "biclab/graph6.hpp"
#include "biclab/json_io.hpp"
#include "biclab/recognition.hpp"
#include "fixture_io.hpp"

using namespace biclab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI through the shell with `input` on stdin; stderr is discarded unless merged.
Run run(const std::string& args, const std::string& input = "", const std::string& env = "", bool merge_stderr = false) {
    const fs::path in = fs::temp_directory_path() / "biclique_lab_test_input.g6";
    {
        std::ofstream f(in);
        f << input;
    }
    const std::string cmd = env + " \"" BICLIQUE_LAB_EXE "\" " + args + " < \"" + in.string() + "\"" + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("biclique_lab_test_" + name);
    fs::remove_all(p);
    return p;
}

const std::string kP6 = "EhCG";
const std::string kC4 = "Cl";

}  // namespace

TEST_SUITE("json") {
    TEST_CASE("catalogue entries round trip") {
        for (const auto& e : build_catalogue(5, 7)) {
            const auto j = to_json(e);
            CHECK(j.at("schema") == kCatalogueSchema);
            const auto back = catalogue_entry_from_json(nlohmann::json::parse(j.dump()));
            CHECK(back.graph == e.graph);
            CHECK(back.classification == e.classification);
            CHECK(back.preimage == e.preimage);
            CHECK(back.max_h_order == e.max_h_order);
            CHECK(back.firing == e.firing);
            CHECK(back.obstruction.has_value() == e.obstruction.has_value());
            if (e.obstruction) {
                CHECK(back.obstruction->check == e.obstruction->check);
                CHECK(back.obstruction->witness == e.obstruction->witness);
            }
            CHECK(verify_entry(back));
        }
    }

    TEST_CASE("schema mismatch is rejected") {
        auto j = to_json(recognize(named::complete(3), 4));
        j["schema"] = "something/else";
        CHECK_THROWS_AS(catalogue_entry_from_json(j), std::invalid_argument);
    }

    TEST_CASE("biclique and finding records carry their schema") {
        const auto [kb, family] = biclique_graph(named::path(6));
        const auto j = to_json(family, kb);
        CHECK(j.at("schema") == kBicliqueSchema);
        CHECK(j.at("bicliques").size() == 4);
        CHECK(to_json(check_hamiltonian(named::complete(3), true)).at("schema") == kFindingSchema);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("bicliques on P6 and C4") {
        const auto p6 = run("bicliques -", kP6 + "\n");
        CHECK(p6.exit_code == 0);
        const auto rows = lines(p6.out);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0] == "# " + kP6);
        CHECK(rows[1] == "0\t0,1,2\t0,2\t1");
        CHECK(rows[4] == "3\t3,4,5\t3,5\t4");
        CHECK(rows[5] == "kb\t" + write_graph6(biclique_graph(named::path(6)).first));

        const auto c4 = run("bicliques --format json -", kC4 + "\n");
        CHECK(c4.exit_code == 0);
        const auto j = nlohmann::json::parse(c4.out);
        CHECK(j.at("bicliques").size() == 1);
        CHECK(j.at("kb") == "@");
    }

    TEST_CASE("kb emits graph6 that chains back into the tool") {
        const auto first = run("kb -", kP6 + "\n" + kC4 + "\n");
        CHECK(first.exit_code == 0);
        CHECK(lines(first.out) == std::vector<std::string>{write_graph6(biclique_graph(named::path(6)).first), "@"});
    }

    TEST_CASE("malformed and disconnected input") {
        const auto bad = run("bicliques -", "B!\n");
        CHECK(bad.exit_code == 1);
        const fs::path err = fs::temp_directory_path() / "biclique_lab_test_err.txt";
        const std::string cmd = "echo 'B!' | \"" BICLIQUE_LAB_EXE "\" bicliques - 2> \"" + err.string() + "\" > /dev/null";
        CHECK(std::system(cmd.c_str()) != 0);
        CHECK(slurp(err).find("line 1") != std::string::npos);
        CHECK(run("check -", "Bw\nA?\n").exit_code == 1);
    }

    TEST_CASE("capability errors exit 2") {
        CHECK(run("recognize --max-h-order 17 -", "Bw\n").exit_code == 2);
    }

    TEST_CASE("distance table") {
        const auto r = run("distance -", kP6 + "\n");
        CHECK(r.exit_code == 0);
        const auto rows = lines(r.out);
        CHECK(rows[1] == "i\tj\td_g\td_kb\tformula_value\twitness_count");
        CHECK(std::find(rows.begin(), rows.end(), "0\t3\t1\t2\t2\t2") != rows.end());
    }

    TEST_CASE("check reports and exit codes") {
        const auto k3 = run("check -", "Bw\n");
        CHECK(k3.exit_code == 0);
        const auto j = nlohmann::json::parse(k3.out);
        CHECK(j.at("schema") == kCheckSchema);

        const auto crown = run("check --format tsv " + fixture_path("crown.g6"));
        CHECK(crown.exit_code == 4);
        CHECK(crown.out.find("twin_k2") != std::string::npos);
        CHECK(crown.out.find("p3_diamond_gem") == std::string::npos);

        const auto hajos = run("check --format tsv " + fixture_path("hajos.g6"));
        CHECK(hajos.exit_code == 4);
        for (const char* name : {"forbidden_subgraph", "degree2_bound", "helly_degree2"}) {
            CHECK(hajos.out.find(name) != std::string::npos);
        }

        const auto filtered = run("check --format graph6 -", "Bw\nBW\n");
        CHECK(filtered.exit_code == 4);
        CHECK(lines(filtered.out) == std::vector<std::string>{"Bw"});
        const auto inverted = run("check --format graph6 --invert -", "Bw\nBW\n");
        CHECK(inverted.exit_code == 4);
        CHECK(lines(inverted.out) == std::vector<std::string>{"BW"});
        CHECK(run("check --invert -", "Bw\n").exit_code == 4);
        CHECK(run("check --invert -", "BW\n").exit_code == 0);
    }

    TEST_CASE("catalogue with tiny bounds") {
        const fs::path out = scratch("cat34");
        const auto r = run("catalogue --max-g-order 3 --max-h-order 4 --workers 1 --out " + out.string());
        CHECK(r.exit_code == 0);
        const auto order3 = lines(slurp(out / "order-3.jsonl"));
        REQUIRE(order3.size() == 2);
        bool saw_k3 = false;
        bool saw_p3 = false;
        for (const auto& line : order3) {
            const auto e = catalogue_entry_from_json(nlohmann::json::parse(line));
            CHECK(verify_entry(e));
            if (e.graph.size() == 3) {
                saw_k3 = true;
                CHECK(e.classification == Classification::kBicliqueGraph);
                CHECK(e.preimage == named::complete(3));
            } else {
                saw_p3 = true;
                CHECK(e.classification == Classification::kNotBicliqueGraph);
                CHECK(std::find(e.firing.begin(), e.firing.end(), Check::kBiconnectivityMinDegree) != e.firing.end());
            }
        }
        CHECK(saw_k3);
        CHECK(saw_p3);
    }

    TEST_CASE("catalogue reruns are byte-identical across worker counts") {
        const fs::path a = scratch("det_a");
        const fs::path b = scratch("det_b");
        CHECK(run("catalogue --max-g-order 5 --max-h-order 7 --workers 1 --out " + a.string()).exit_code == 0);
        CHECK(run("catalogue --max-g-order 5 --max-h-order 7 --out " + b.string(), "", "BICLIQUE_LAB_WORKERS=3").exit_code == 0);
        for (int n = 2; n <= 5; ++n) {
            const std::string file = "order-" + std::to_string(n) + ".jsonl";
            CHECK(slurp(a / file) == slurp(b / file));
            CHECK_FALSE(slurp(a / file).empty());
        }
    }

    TEST_CASE("fixture mismatch exits 3 and names the missing graphs") {
        const fs::path fixture = scratch("fixture.g6");
        {
            std::ofstream f(fixture);
            f << "A_\nBw\nBW\n";
        }
        const auto r = run("catalogue --max-g-order 3 --max-h-order 4 --out " + scratch("mm").string() + " --fixture " +
                           fixture.string(),
                           "", "", true);
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("BW") != std::string::npos);

        const auto missing = run("catalogue --max-g-order 3 --max-h-order 4 --strict --out " + scratch("mm2").string() +
                                 " --fixture " + scratch("absent.g6").string());
        CHECK(missing.exit_code == 3);
        const auto lenient = run("catalogue --max-g-order 3 --max-h-order 4 --out " + scratch("mm3").string() +
                                 " --fixture " + scratch("absent.g6").string());
        CHECK(lenient.exit_code == 0);
    }

    TEST_CASE("conjecture scan over a small catalogue") {
        const fs::path cat = scratch("conj");
        REQUIRE(run("catalogue --max-g-order 5 --max-h-order 7 --out " + cat.string()).exit_code == 0);
        const fs::path findings = scratch("findings.jsonl");
        const auto r = run("conjectures " + cat.string() + " --out " + findings.string());
        CHECK(r.exit_code == 0);
        const auto rows = lines(slurp(findings));
        CHECK_FALSE(rows.empty());
        for (const auto& row : rows) {
            const auto j = nlohmann::json::parse(row);
            CHECK(j.at("schema") == kFindingSchema);
            CHECK(j.at("verdict") != "counterexample");
        }
    }
}
