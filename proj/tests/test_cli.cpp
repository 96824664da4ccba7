// End-to-end checks of the command-line tool: output bytes, exit
// codes, file inputs, and cache behavior.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "zerosum/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

} // namespace

TEST_CASE("davenport command output and exit-code contract") {
    auto r = run_cli("davenport --group 2,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"value\":5") != std::string::npos);

    CHECK(run_cli("davenport --group 4,2").exit_code == 2);  // malformed chain
    CHECK(run_cli("davenport --group 2,4 --cap-nodes 10").exit_code == 3);
    CHECK(run_cli("davenport").exit_code == 2);              // missing flag
    CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("qt and intersection match the library") {
    auto r = run_cli("qt --group 5 --t 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"members\":[]") != std::string::npos);

    auto inter = run_cli("intersection --group 4");
    CHECK(inter.exit_code == 0);
    auto payload = zerosum::json::parse(inter.output);
    CHECK(payload["members"].size() == 7);
}

TEST_CASE("omega files flow through domega and is-minimal") {
    auto atoms = run_cli("enumerate-a --group 6");
    REQUIRE(atoms.exit_code == 0);
    auto path = temp_file("zs_cli_atoms6.json", atoms.output);

    auto d = run_cli("domega --group 6 --omega " + path.string());
    CHECK(d.exit_code == 0);
    CHECK(zerosum::json::parse(d.output)["value"] == 6);

    auto ism = run_cli("is-minimal --group 6 --omega " + path.string() + " --t 6");
    CHECK(ism.exit_code == 0);
    CHECK(zerosum::json::parse(ism.output)["minimal"] == false);

    CHECK(run_cli("domega --group 5 --omega " + path.string()).exit_code == 2);
}

TEST_CASE("weighted command with builtin and file weights") {
    auto pm = run_cli("weighted --group 5 --psi plusminus");
    CHECK(pm.exit_code == 0);
    auto payload = zerosum::json::parse(pm.output);
    CHECK(payload["value"] == 3);
    CHECK(payload["bound_holds"] == true);
    CHECK(payload["kernel_cover_verified"] == true);

    // mod-3 reduction as an explicit file
    zerosum::FiniteAbelianGroup z6({6}), z3({3});
    auto psi = zerosum::WeightSet(
        z6, z3, {zerosum::Homomorphism(z6, z3, {z3.element({1})})});
    auto path = temp_file("zs_cli_psi63.json", zerosum::encode(psi).dump());
    auto red = run_cli("weighted --group 6 --codomain 3 --psi " + path.string());
    CHECK(red.exit_code == 0);
    CHECK(zerosum::json::parse(red.output)["value"] == 3);

    CHECK(run_cli("weighted --group 6 --psi " + path.string()).exit_code == 2);
}

TEST_CASE("cover subcommands") {
    zerosum::FiniteAbelianGroup z6({6});
    auto sub = zerosum::subgroup_generated_idx(z6, {2});
    zerosum::CoverSystem system(
        z6, {zerosum::Coset(z6, 0, sub), zerosum::Coset(z6, 1, sub),
             zerosum::Coset(z6, 0, zerosum::subgroup_generated_idx(z6, {3}))});
    auto path = temp_file("zs_cli_cover6.json", zerosum::encode(system).dump());

    auto check = run_cli("cover check --file " + path.string());
    CHECK(check.exit_code == 0);
    CHECK(zerosum::json::parse(check.output)["covers"] == true);

    auto reduce = run_cli("cover reduce --file " + path.string());
    CHECK(reduce.exit_code == 0);
    auto reduced = zerosum::json::parse(reduce.output);
    CHECK(reduced["cosets"].size() == 2);
    CHECK(reduced["removed"] == 1);

    auto reduced_path = temp_file("zs_cli_cover6r.json", reduce.output);
    auto sun = run_cli("cover sun --file " + reduced_path.string());
    CHECK(sun.exit_code == 0);
    CHECK(zerosum::json::parse(sun.output)["holds"] == true);
    CHECK(run_cli("cover sun --file " + path.string()).exit_code == 2); // redundant

    auto p64 = run_cli("cover prop64 --group 4 --psi identity");
    CHECK(p64.exit_code == 0);
    auto pj = zerosum::json::parse(p64.output);
    CHECK(pj["max_irredundant"] == 4);
    CHECK(pj["bound"] == 8);
    CHECK(pj["verdict"] == "holds");
}

TEST_CASE("repeat runs are byte-identical and cached runs replay them") {
    auto first = run_cli("intersection --group 6");
    auto second = run_cli("intersection --group 6");
    CHECK(first.output == second.output);

    auto dir = std::filesystem::temp_directory_path() / "zs_cli_cache";
    std::filesystem::remove_all(dir);
    std::string flags = " --cache " + dir.string();
    auto cold = run_cli("qt --group 6 --t 6" + flags);
    CHECK(cold.exit_code == 0);
    REQUIRE(std::filesystem::exists(dir));
    bool has_entry = false;
    for (auto& e : std::filesystem::directory_iterator(dir)) has_entry |= e.is_regular_file();
    CHECK(has_entry);
    auto warm = run_cli("qt --group 6 --t 6" + flags);
    CHECK(warm.exit_code == 0);
    CHECK(warm.output == cold.output);
    // different caps key differently
    auto other = run_cli("qt --group 6 --t 6 --cap-nodes 99999999" + flags);
    CHECK(other.output == cold.output);
}

TEST_CASE("text format renders flat key-value lines") {
    auto r = run_cli("davenport --group 6 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value = 6") != std::string::npos);
}

TEST_CASE("single sweep suites run through the CLI") {
    auto r = run_cli("sweep --suite integer-scalar-demo");
    CHECK(r.exit_code == 0);
    auto payload = zerosum::json::parse(r.output);
    CHECK(payload["passed"] == true);
    CHECK(payload["reports"][0]["suite"] == "integer-scalar-demo");

    CHECK(run_cli("sweep --suite no-such-suite").exit_code == 2);
}

TEST_CASE("is-minimal reports the positive case as well") {
    auto atoms = run_cli("enumerate-a --group 4");
    REQUIRE(atoms.exit_code == 0);
    auto path = temp_file("zs_cli_atoms4.json", atoms.output);
    auto ism = run_cli("is-minimal --group 4 --omega " + path.string() + " --t 4");
    CHECK(ism.exit_code == 0);
    CHECK(zerosum::json::parse(ism.output)["minimal"] == true);
}
