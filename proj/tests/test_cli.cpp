#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("udgfvs_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Run run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = std::string(UDGFVS_CLI) + " " + args + " > " + out.string() + " 2> " + (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("solve exit codes on C4") {
    const fs::path c4 = scratch() / "c4.graph";
    write(c4, "p fvs 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    const Run yes = run("solve " + c4.string() + " --k 1 --json");
    CHECK(yes.code == 0);
    const auto j = nlohmann::json::parse(yes.out);
    CHECK(j["verdict"] == "yes");
    CHECK(j["fvs"].size() == 1);
    for (const char* field : {"certificate", "weighted_width", "high_degree_count", "class_count", "timings"}) CHECK(j.contains(field));

    CHECK(run("solve " + c4.string() + " --k 0").code == 1);
    CHECK(run("solve " + c4.string() + " --k 0 --mode dp-naive --no-thresholds").code == 1);
    CHECK(run("solve " + c4.string() + " --k 1 --mode oracle").code == 0);
    CHECK(run("oracle " + c4.string() + " --k 1").code == 0);
    CHECK(run("oracle " + c4.string() + " --k 0").code == 1);
}

TEST_CASE("errors exit with 2") {
    const fs::path bad = scratch() / "bad.graph";
    write(bad, "p fvs 3 2\ne 0 1\n");
    CHECK(run("solve " + bad.string() + " --k 1").code == 2);
    CHECK(run("solve " + (scratch() / "missing.graph").string() + " --k 1").code == 2);
    CHECK(run("solve --k 1").code == 2);
    CHECK(run("solve " + bad.string() + " --k 1 --mode turbo").code == 2);
    CHECK(run("frobnicate").code == 2);
    const fs::path big = scratch() / "big.graph";
    std::string text = "p fvs 30 29\n";
    for (int i = 0; i < 29; ++i) text += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    write(big, text);
    CHECK(run("oracle " + big.string() + " --k 1").code == 2);
}

TEST_CASE("gen is deterministic and feeds the other subcommands") {
    const std::string a = (scratch() / "a").string(), b = (scratch() / "b").string();
    CHECK(run("gen --udg -n 50 --density 0.2 --seed 1 --out " + a).code == 0);
    CHECK(run("gen --udg -n 50 --density 0.2 --seed 1 --out " + b).code == 0);
    CHECK(slurp(a + ".points") == slurp(b + ".points"));
    CHECK(slurp(a + ".graph") == slurp(b + ".graph"));
    CHECK(slurp(a + ".points").rfind("p objects 50 1 1\n", 0) == 0);

    CHECK(run("gen --udg -n 1 --out " + a).code == 0);
    CHECK(slurp(a + ".graph") == "p fvs 1 0\n");

    const Run planted = run("gen --planted -k 9 --seed 2 --out " + a);
    CHECK(planted.code == 0);
    const auto j = nlohmann::json::parse(planted.out);
    CHECK(j["hubs"].size() == 9);
    CHECK(run("solve " + a + ".points --k 9").code == 0);
    CHECK(run("solve " + a + ".graph --k 8").code == 1);

    const Run v = run("validate " + a + ".points");
    CHECK(v.code == 0);
    const auto vj = nlohmann::json::parse(v.out);
    CHECK(vj["violations"].empty());
    for (const char* field : {"kappa_observed", "max_contraction_degree", "class_count"}) CHECK(vj.contains(field));

    CHECK(run("gen --udg --planted --out " + a).code == 2);
    CHECK(run("gen --udg -n 0 --out " + a).code == 2);
}

TEST_CASE("solve writes a readable decomposition") {
    const std::string a = (scratch() / "td").string();
    CHECK(run("gen --udg -n 40 --density 0.8 --seed 3 --out " + a).code == 0);
    const Run r = run("solve " + a + ".graph --k 40 --td " + a + ".td");
    CHECK(r.code == 0);
    CHECK(slurp(a + ".td").rfind("s td ", 0) == 0);
}

TEST_CASE("compare agrees") {
    const std::string a = (scratch() / "cmp").string();
    CHECK(run("gen --udg -n 14 --density 1.0 --seed 4 --out " + a).code == 0);
    const Run r = run("compare " + a + ".points");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["agree"] == true);
}

TEST_CASE("bench CSV is byte identical across runs") {
    const fs::path c1 = scratch() / "b1.csv", c2 = scratch() / "b2.csv", js = scratch() / "b.json";
    const std::string args = "bench --ks 4,9 --seeds 3 --path-len 20 --csv ";
    CHECK(run(args + c1.string() + " --json " + js.string()).code == 0);
    CHECK(run(args + c2.string()).code == 0);
    CHECK(slurp(c1) == slurp(c2));
    CHECK(nlohmann::json::parse(slurp(js))["schema"] == 1);
}
