// Drives the kraw binary end to end.  Pass the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "kraw/core_matrices.hpp"
#include "kraw/matrix.hpp"
#include "kraw/serialize.hpp"
#include "kraw/symtensor.hpp"
#include "kraw/walks.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-kraw>\n";
        return 1;
    }
    const std::string kraw = argv[1];
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "kraw_cli_test";
    std::filesystem::create_directories(dir);

    // Generation matches the library for every kind.
    {
        const RunResult r = run(kraw + " gen --kind k --order 6");
        expect(r.status == 0, "gen k exits 0");
        expect(kraw::exact_matrix_from_json(r.out) ==
                   kraw::krawtchouk_matrix(kraw::Order(6)),
               "gen k JSON equals library matrix");
    }
    {
        const RunResult r = run(kraw + " gen --kind s --order 5 --format csv");
        expect(r.status == 0, "gen s csv exits 0");
        expect(kraw::exact_matrix_from_csv(r.out) ==
                   kraw::symmetric_krawtchouk(kraw::Order(5)),
               "gen s CSV equals library matrix");
    }
    {
        const RunResult r = run(kraw + " gen --kind hbar --order 4");
        expect(r.status == 0, "gen hbar exits 0");
        expect(kraw::exact_matrix_from_json(r.out) ==
                   kraw::symmetric_representation(kraw::hadamard_operator(),
                                                  kraw::Order(4)),
               "gen hbar equals induced action");
    }
    {
        const RunResult r = run(kraw + " gen --kind urn-step --order 5");
        expect(r.status == 0, "gen urn-step exits 0");
        expect(kraw::rational_matrix_from_json(r.out) ==
                   kraw::urn_step_matrix(kraw::Order(5)),
               "gen urn-step equals library matrix");
    }

    // --out writes the same bytes the pipe carries.
    {
        const auto path = (dir / "k4.json").string();
        const RunResult r = run(kraw + " gen --kind k --order 4 --out " + path);
        expect(r.status == 0, "gen --out exits 0");
        std::ifstream in(path, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        expect(kraw::exact_matrix_from_json(text) ==
                   kraw::krawtchouk_matrix(kraw::Order(4)),
               "gen --out file parses back");
    }

    // condense agrees with gen s and respects --jobs.
    {
        const RunResult serial = run(kraw + " condense --order 6");
        const RunResult threaded = run(kraw + " condense --order 6 --jobs 3");
        expect(serial.status == 0 && threaded.status == 0, "condense exits 0");
        expect(serial.out == threaded.out, "condense --jobs output identical");
        expect(kraw::exact_matrix_from_json(serial.out) ==
                   kraw::symmetric_krawtchouk(kraw::Order(6)),
               "condense equals symmetric matrix");
    }

    // Every verify check passes on healthy data.
    const char* checks[] = {"square",     "condense",        "recursion-s",
                            "recursion-k", "hbar",           "spectral",
                            "so21",       "martingale",      "ortho-binomial",
                            "ortho-multinomial",             "lauricella",
                            "hypergeo"};
    for (const char* check : checks) {
        const RunResult r =
            run(kraw + " verify --check " + check + " --order 5");
        expect(r.status == 0, std::string("verify ") + check + " exits 0");
        expect(r.out.find("\"pass\":true") != std::string::npos,
               std::string("verify ") + check + " reports pass");
    }

    // Corrupted matrices drive every matrix-feedable check to exit 1.
    {
        kraw::ExactMatrix bad_k = kraw::krawtchouk_matrix(kraw::Order(5));
        bad_k(2, 3) += 1;
        const auto bad_k_path = (dir / "bad_k.json").string();
        write_file(bad_k_path, kraw::to_json(bad_k));
        for (const char* check : {"square", "recursion-k", "hbar", "spectral",
                                  "martingale", "ortho-binomial",
                                  "ortho-multinomial", "lauricella", "hypergeo"}) {
            const RunResult r = run(kraw + " verify --check " + check +
                                    " --order 5 --input " + bad_k_path);
            expect(r.status == 1,
                   std::string("verify ") + check + " flags corrupted input");
            expect(r.out.find("\"pass\":false") != std::string::npos,
                   std::string("verify ") + check + " reports failure");
            expect(r.out.find("counterexample") != std::string::npos,
                   std::string("verify ") + check + " carries a counterexample");
        }

        kraw::ExactMatrix bad_s = kraw::symmetric_krawtchouk(kraw::Order(5));
        bad_s(0, 0) += 2;
        const auto bad_s_path = (dir / "bad_s.json").string();
        write_file(bad_s_path, kraw::to_json(bad_s));
        for (const char* check : {"condense", "recursion-s"}) {
            const RunResult r = run(kraw + " verify --check " + check +
                                    " --order 5 --input " + bad_s_path);
            expect(r.status == 1,
                   std::string("verify ") + check + " flags corrupted input");
        }

        kraw::ExactMatrix bad_a = kraw::kac_matrix(kraw::Order(5));
        bad_a(1, 2) += 1;
        const auto bad_a_path = (dir / "bad_a.json").string();
        write_file(bad_a_path, kraw::to_json(bad_a));
        const RunResult r = run(kraw + " verify --check so21 --order 5 --input " +
                                bad_a_path);
        expect(r.status == 1, "verify so21 flags corrupted ladder input");
    }

    // CSV input is accepted for verification too.
    {
        const auto path = (dir / "k3.csv").string();
        write_file(path, kraw::to_csv(kraw::krawtchouk_matrix(kraw::Order(3))));
        const RunResult r =
            run(kraw + " verify --check square --order 3 --input " + path);
        expect(r.status == 0, "verify accepts CSV input");
    }

    // Simulation replays bit for bit and evolve produces the exact law.
    {
        const RunResult a = run(kraw + " urn --order 5 --steps 100 --seed 42");
        const RunResult b = run(kraw + " urn --order 5 --steps 100 --seed 42");
        expect(a.status == 0 && a.out == b.out, "urn simulation is reproducible");
        expect(a.out.rfind("step,state\n", 0) == 0, "urn CSV header present");

        const RunResult ev =
            run(kraw + " urn --order 4 --steps 2 --evolve --start 0");
        expect(ev.status == 0, "urn --evolve exits 0");
        const kraw::FiniteDistribution d = kraw::distribution_from_json(ev.out);
        expect(d.probs[0] == kraw::Rat(1, 4) && d.probs[2] == kraw::Rat(3, 4),
               "urn --evolve two-step law");
    }

    // Transform round trip through the CLI.
    {
        const RunResult fwd =
            run(kraw + " transform --order 2 --vector 1,1,1");
        expect(fwd.status == 0, "transform exits 0");
        expect(fwd.out.find("[\"3\",\"0\",\"1\"]") != std::string::npos,
               "forward transform values");
        const RunResult back =
            run(kraw + " transform --order 2 --direction inverse --vector 3,0,1");
        expect(back.out.find("[\"1\",\"1\",\"1\"]") != std::string::npos,
               "inverse transform restores input");
    }

    // ortho subcommand runs both sweeps.
    {
        const RunResult r = run(kraw + " ortho --order 8");
        expect(r.status == 0, "ortho exits 0");
        const auto dist_path = (dir / "sites.json").string();
        write_file(dist_path,
                   R"({"xi":[{"num":"0","den":"1"},{"num":"1","den":"1"},{"num":"2","den":"1"}],)"
                   R"("p":[{"num":"1","den":"4"},{"num":"1","den":"2"},{"num":"1","den":"4"}]})");
        const RunResult multi =
            run(kraw + " ortho --order 4 --dist " + dist_path);
        expect(multi.status == 0, "ortho --dist exits 0");
        expect(multi.out.find("ortho-multinomial") != std::string::npos,
               "ortho --dist runs the multinomial sweep");
    }

    // Usage errors exit 2.
    {
        expect(run(kraw + " gen --kind nope --order 3").status == 2,
               "unknown kind exits 2");
        expect(run(kraw + " verify --check nope --order 3").status == 2,
               "unknown check exits 2");
        expect(run(kraw + " gen --kind k").status == 2, "missing --order exits 2");
        expect(run(kraw + " frobnicate").status == 2, "unknown subcommand exits 2");
        expect(run(kraw + " gen --kind h --order 25").status == 2,
               "cap breach exits 2");
        expect(run(kraw + " verify --check square --order 4 --input /nonexistent")
                       .status == 2,
               "missing input file exits 2");
        const auto garbled = (dir / "garbled.json").string();
        write_file(garbled, "{\"rows\": 2");
        expect(run(kraw + " verify --check square --order 1 --input " + garbled)
                       .status == 2,
               "malformed input exits 2");
        expect(run(kraw + " --help").status == 0, "--help exits 0");
    }

    if (failures) {
        std::cerr << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
