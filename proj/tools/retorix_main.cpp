// Command-line front-end. Talks to the engine exclusively through the C
// API in retorix.h; all heavy lifting lives behind the shared library.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "retorix.h"

namespace {

int status_to_exit(rtx_status s) {
    switch (s) {
        case RTX_OK:
            return 0;
        case RTX_ERR_CAPACITY:
            return 2;
        default:
            return 1;
    }
}

[[noreturn]] void fail(rtx_status s) {
    std::string msg = rtx_last_error();
    for (char& c : msg)
        if (c == '"') c = '\'';
    std::cout << "{\"error\": \"" << msg << "\"}" << std::endl;
    std::exit(status_to_exit(s));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cout << "{\"error\": \"cannot open file: " << path << "\"}" << std::endl;
        std::exit(1);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ComplexHandle {
    rtx_complex* ptr = nullptr;
    ~ComplexHandle() { rtx_complex_free(ptr); }
};

struct MatrixHandle {
    rtx_matrix* ptr = nullptr;
    ~MatrixHandle() { rtx_matrix_free(ptr); }
};

// A complex argument is a file path, a standard-family spec ("cross:3"),
// or inline JSON.
void load_complex(const std::string& arg, ComplexHandle& out) {
    std::string text = arg;
    if (arg.find(':') == std::string::npos && arg.find('{') == std::string::npos) text = read_file(arg);
    const rtx_status s = rtx_complex_parse(text.c_str(), &out.ptr);
    if (s != RTX_OK) fail(s);
}

// A matrix argument is a file path or inline JSON "[[0,1],...]".
void load_matrix(const std::string& arg, MatrixHandle& out) {
    std::string text = arg;
    const size_t first = arg.find_first_not_of(" \t");
    if (first == std::string::npos || arg[first] != '[') text = read_file(arg);
    const rtx_status s = rtx_matrix_parse(text.c_str(), &out.ptr);
    if (s != RTX_OK) fail(s);
}

void print_result(rtx_status s, char** json) {
    if (s != RTX_OK) fail(s);
    std::cout << *json << std::endl;
    rtx_string_free(*json);
    *json = nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"retorix — exact cohomology rings of real toric spaces"};
    app.require_subcommand(1);

    std::string complex_arg, lambda_arg, matrix_arg, deps_arg, blocks_arg;
    int max_degree = -1, dim = -1, count_n = 0, cases = 200;
    std::uint64_t seed = 1;
    bool almost = false;

    auto* betti = app.add_subcommand("betti", "graded Betti numbers of M^R(K, Λ)");
    betti->add_option("--complex", complex_arg, "complex JSON file or family spec")->required();
    betti->add_option("--lambda", lambda_arg, "characteristic matrix file (default: identity)");

    auto* ring = app.add_subcommand("ring", "cohomology ring basis and structure constants");
    ring->add_option("--complex", complex_arg, "complex JSON file or family spec")->required();
    ring->add_option("--lambda", lambda_arg, "characteristic matrix file (default: identity)");
    ring->add_option("--max-degree", max_degree, "truncate products above this degree");

    auto* bott = app.add_subcommand("bott", "(generalized) real Bott manifold invariants");
    bott->add_option("--matrix", matrix_arg, "strictly upper triangular matrix file");
    bott->add_option("--deps", deps_arg, "dependency relations file (one 0/1 row per line)");
    bott->add_option("--blocks", blocks_arg, "block sizes n1,n2,... (generalized case)");
    bott->add_option("--dim", dim, "top degree for the Betti vector");

    auto* matroid = app.add_subcommand("matroid", "binary matroid utilities");
    auto* mc = matroid->add_subcommand("circuits", "circuits of the column matroid");
    mc->add_option("--matrix", matrix_arg, "GF(2) matrix file")->required();
    auto* mt = matroid->add_subcommand("triangularize", "strictly upper triangular representative");
    mt->add_option("--matrix", matrix_arg, "GF(2) matrix file")->required();
    auto* mn = matroid->add_subcommand("count", "count binary matroids on an n-set");
    mn->add_option("-n", count_n, "ground set size (<= 5)")->required();
    matroid->require_subcommand(1);

    auto* csymp = app.add_subcommand("csymp", "cohomologically-symplectic decision");
    csymp->add_option("--complex", complex_arg, "complex JSON file or family spec")->required();
    csymp->add_option("--lambda", lambda_arg, "characteristic matrix file");
    csymp->add_flag("--almost", almost, "mixed degree-1/2 witness search");

    auto* check = app.add_subcommand("check", "validate Λ and the Euler characteristic");
    check->add_option("--complex", complex_arg, "complex JSON file or family spec")->required();
    check->add_option("--lambda", lambda_arg, "characteristic matrix file (default: identity)");

    auto* repro = app.add_subcommand("repro", "run the built-in reproduction fixtures");
    (void)repro;

    auto* selftest = app.add_subcommand("selftest", "randomized property suites");
    selftest->add_option("--seed", seed, "random seed");
    selftest->add_option("--cases", cases, "minimum cases per suite");

    CLI11_PARSE(app, argc, argv);

    char* json = nullptr;
    if (betti->parsed() || ring->parsed() || csymp->parsed() || check->parsed()) {
        ComplexHandle K;
        load_complex(complex_arg, K);
        MatrixHandle lam;
        if (!lambda_arg.empty()) load_matrix(lambda_arg, lam);
        if (betti->parsed()) {
            print_result(rtx_betti(K.ptr, lam.ptr, &json), &json);
        } else if (ring->parsed()) {
            print_result(rtx_ring(K.ptr, lam.ptr, max_degree, &json), &json);
        } else if (csymp->parsed()) {
            print_result(rtx_csymp(K.ptr, lam.ptr, almost ? 1 : 0, &json), &json);
        } else {
            print_result(rtx_check(K.ptr, lam.ptr, &json), &json);
        }
        return 0;
    }

    if (bott->parsed()) {
        if (matrix_arg.empty() == deps_arg.empty()) {
            std::cout << "{\"error\": \"bott needs exactly one of --matrix or --deps\"}" << std::endl;
            return 1;
        }
        MatrixHandle m;
        if (!matrix_arg.empty()) {
            load_matrix(matrix_arg, m);
            print_result(rtx_bott(m.ptr, blocks_arg.empty() ? nullptr : blocks_arg.c_str(), dim, &json),
                         &json);
        } else {
            load_matrix(deps_arg, m);
            print_result(rtx_bott_from_deps(m.ptr, dim, &json), &json);
        }
        return 0;
    }

    if (matroid->parsed()) {
        if (mn->parsed()) {
            print_result(rtx_matroid_count(count_n, &json), &json);
            return 0;
        }
        MatrixHandle m;
        load_matrix(matrix_arg, m);
        if (mc->parsed())
            print_result(rtx_matroid_circuits(m.ptr, &json), &json);
        else
            print_result(rtx_matroid_triangularize(m.ptr, &json), &json);
        return 0;
    }

    if (repro->parsed()) {
        const rtx_status s = rtx_repro(&json);
        if (s != RTX_OK) fail(s);
        // Render the fixture list as a plain pass/fail table.
        const nlohmann::json report = nlohmann::json::parse(json);
        rtx_string_free(json);
        for (const auto& row : report.at("fixtures")) {
            const bool pass = row.at("pass").get<bool>();
            std::string line = pass ? "PASS " : "FAIL ";
            line += row.at("name").get<std::string>();
            if (row.contains("detail")) line += "  [" + row.at("detail").get<std::string>() + "]";
            std::cout << line << "\n";
        }
        const bool all = report.at("all_pass").get<bool>();
        std::cout << (all ? "all fixtures pass" : "FIXTURE FAILURES") << std::endl;
        return all ? 0 : 1;
    }

    if (selftest->parsed()) {
        const rtx_status s = rtx_selftest(seed, cases, &json);
        if (s != RTX_OK) fail(s);
        const std::string text = json;
        rtx_string_free(json);
        std::cout << text << std::endl;
        const nlohmann::json report = nlohmann::json::parse(text);
        return report.at("all_pass").get<bool>() ? 0 : 1;
    }

    return 0;
}
