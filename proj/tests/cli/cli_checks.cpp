// Black-box checks of the command-line tool: exit codes, report shape, and
// byte-identical reruns. Takes the tool path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string g_tool;
int g_failures = 0;

RunResult run(const std::string& args) {
    std::string cmd = g_tool + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(2);
    }
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::printf("[ok] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++g_failures;
    }
}

void expect_exit(const std::string& args, int code) {
    RunResult r = run(args);
    expect(r.exit_code == code,
           "`" + args + "` exits " + std::to_string(code) + " (got " +
               std::to_string(r.exit_code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <tool-path>\n";
        return 2;
    }
    g_tool = argv[1];

    RunResult curv = run("curvature --preset sl2-lorentz");
    expect(curv.exit_code == 0, "curvature on sl2-lorentz passes");
    expect(curv.output.find("k_raw(X,Y)") != std::string::npos, "curvature labels pairs");
    expect(curv.output.find("\"float\":\"-2\"") != std::string::npos,
           "curvature reports -2");
    expect(curv.output.find("\"pass\":true") != std::string::npos, "record carries pass flag");

    RunResult again = run("curvature --preset sl2-lorentz");
    expect(curv.output == again.output, "reruns are byte-identical");

    expect_exit("curvature --preset nonexistent", 2);
    expect_exit("", 2);
    expect_exit("iwasawa --matrix '1,1;0,1' --order kan", 0);
    expect_exit("iwasawa --matrix '2,0;0,1' --order kan", 2);    // det != 1
    expect_exit("iwasawa --matrix '1,x;0,1' --order kan", 2);    // malformed literal
    expect_exit("iwasawa --matrix '1,1;0,1' --order qr", 2);     // unknown order
    expect_exit("psi --verify-nak --samples 1000 --seed 7", 0);
    expect_exit("psi --verify-nak --samples 200", 2);          // missing seed
    expect_exit("psi --eval 1,0,0", 0);
    expect_exit("psi --eval 1,2,0", 2);                        // outside the domain
    expect_exit("algebra check --preset rxsol2", 0);
    expect_exit("connection --preset so2sol2-lorentz", 0);
    expect_exit("orthonormalize --preset g3-goedel", 0);
    expect_exit("scale --preset rxsol2 --c 1/4 --compare sl2-lorentz", 0);
    expect_exit("scale --preset rxsol2 --c -1", 2);
    expect_exit("geodesic --preset sl2-lorentz --v 1,0,0 --t 1 --steps 100 --stride 100", 0);
    expect_exit("goedel components --point 0,0,0,0 --a 1", 0);
    expect_exit("goedel components --point 0,0,0,0 --a -1", 2);
    expect_exit("goedel pullback-check --samples 50 --seed 3", 0);
    expect_exit("goedel christoffel --point 0.2,-0.3,1,0", 0);
    expect_exit("maps check --samples 50 --seed 5", 0);
    expect_exit("psi --pushforward 1.5,0.3,2.0 --step 1e-4", 0);

    // a deliberately coarse integration misses the energy tolerance: exit 1
    expect_exit("geodesic --preset rxsol2 --v 1,1,1 --t 2 --steps 3 --stride 3", 1);

    if (argc > 2) {
        std::string data = argv[2];
        expect_exit("curvature --preset-file " + data + "/presets/rxsol2.json", 0);
        expect_exit("algebra check --preset-file " + data + "/presets/goedel4.json", 0);
        expect_exit("curvature --preset-file /nonexistent.json", 2);
    }

    RunResult psi_seeded = run("psi --verify-nak --samples 1000 --seed 7");
    expect(psi_seeded.output.find("\"seed\":7") != std::string::npos, "seed echoed in record");

    RunResult verify = run("verify-all");
    expect(verify.exit_code == 0, "verify-all passes");
    RunResult verify2 = run("verify-all");
    expect(verify.output == verify2.output, "verify-all reruns are byte-identical");

    std::printf("%d failures\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
