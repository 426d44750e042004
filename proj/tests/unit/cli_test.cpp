#include <doctest.h>

#include "linhash/codefile.hpp"
#include "../support/test_util.hpp"

using namespace linhash;
using testutil::read_file;
using testutil::run_cli;
using testutil::write_file;

TEST_CASE("cli end to end: burst detection") {
    std::string dir = testutil::scratch_dir();
    std::string code = dir + "/detect.lh";

    auto build = run_cli("build --mode detect --L 6 --burst 2:strict --out " + code);
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("l=1 info=5") != std::string::npos);

    LoadResult lr = load_code(code);
    REQUIRE(lr.ok());
    std::vector<std::string> table;
    for (const BitWord& v : lr.code->spec.hash().table()) table.push_back(v.to_string());
    CHECK(table == std::vector<std::string>{"1", "0", "1", "0", "1", "0"});

    write_file(dir + "/info.txt", "11001");
    auto enc = run_cli("encode --code " + code + " --in " + dir + "/info.txt --out " + dir + "/sent.txt");
    CHECK(enc.exit_code == 0);
    CHECK(read_file(dir + "/sent.txt") == "111001\n");

    auto dec = run_cli("decode --code " + code + " --in " + dir + "/sent.txt --out " + dir + "/status.txt");
    CHECK(dec.exit_code == 0);
    CHECK(read_file(dir + "/status.txt") == "C\n");

    write_file(dir + "/garbled.txt", "100001\n");
    auto bad = run_cli("decode --code " + code + " --in " + dir + "/garbled.txt --out " + dir + "/status2.txt");
    CHECK(bad.exit_code == 0);
    CHECK(read_file(dir + "/status2.txt") == "E\n");
}

TEST_CASE("cli end to end: burst correction") {
    std::string dir = testutil::scratch_dir();
    std::string code = dir + "/correct.lh";

    auto build = run_cli("build --mode correct --L 6 --burst 2:strict --out " + code);
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("l=4 info=2") != std::string::npos);

    write_file(dir + "/info.txt", "10\n");
    REQUIRE(run_cli("encode --code " + code + " --in " + dir + "/info.txt --out " + dir + "/sent.txt").exit_code == 0);
    std::string sent = read_file(dir + "/sent.txt");

    // flip the burst 011000 into the frame
    BitWord frame = BitWord::from_string(sent.substr(0, 6));
    BitWord garbled = frame ^ BitWord::from_string("011000");
    write_file(dir + "/recv.txt", garbled.to_string() + "\n");

    auto dec = run_cli("decode --code " + code + " --in " + dir + "/recv.txt --out " + dir +
                       "/out.txt --log " + dir + "/log.txt");
    CHECK(dec.exit_code == 0);
    CHECK(read_file(dir + "/out.txt") == "10\n");
    CHECK(read_file(dir + "/log.txt").find("frame 0: corrected 011000") != std::string::npos);

    // a distortion outside the model whose syndrome is not in the table
    LoadResult lr = load_code(code);
    REQUIRE(lr.ok());
    BitWord novel(6);
    bool found = false;
    for (uint32_t m = 1; m < 64 && !found; ++m) {
        BitWord w(6);
        for (uint32_t j = 0; j < 6; ++j)
            if ((m >> j) & 1) w.set_bit(j + 1, true);
        BitWord s = lr.code->spec.hash().eval(w);
        if (!s.is_zero() && lr.code->syndromes->find(s) == nullptr) {
            novel = w;
            found = true;
        }
    }
    REQUIRE(found);
    write_file(dir + "/recv2.txt", (frame ^ novel).to_string() + "\n");
    auto unc = run_cli("decode --code " + code + " --in " + dir + "/recv2.txt --out " + dir +
                       "/out2.txt --log " + dir + "/log2.txt");
    CHECK(unc.exit_code == 5);
    CHECK(read_file(dir + "/log2.txt").find("uncorrectable") != std::string::npos);

    // encode -> decode over a clean channel is the identity on the bitstream
    write_file(dir + "/many.txt", "10\n01\n11\n00\n");
    REQUIRE(run_cli("encode --code " + code + " --in " + dir + "/many.txt --out " + dir +
                    "/many.sent").exit_code == 0);
    auto clean = run_cli("decode --code " + code + " --in " + dir + "/many.sent --out " + dir +
                         "/many.back --log " + dir + "/many.log");
    CHECK(clean.exit_code == 0);
    CHECK(read_file(dir + "/many.back") == "10\n01\n11\n00\n");
    CHECK(read_file(dir + "/many.log").empty());
}

TEST_CASE("cli build: bounded-weight routes") {
    std::string dir = testutil::scratch_dir();
    auto hamming = run_cli("build --mode correct --L 7 --d 3 --algorithm 1 --out " + dir + "/h.lh");
    CHECK(hamming.exit_code == 0);
    CHECK(hamming.output.find("l=3 info=4") != std::string::npos);
    LoadResult lr = load_code(dir + "/h.lh");
    REQUIRE(lr.ok());
    CHECK(lr.code->syndromes.has_value());
    CHECK(lr.code->syndromes->size() == 7);

    auto rand3 = run_cli("build --mode detect --L 16 --d 3 --algorithm 3 --delta 3 --seed 11 --out " +
                         dir + "/r.lh");
    if (rand3.exit_code == 0) {
        CHECK(rand3.output.find("success_bound=") != std::string::npos);
        LoadResult rr = load_code(dir + "/r.lh");
        REQUIRE(rr.ok());
        bool has_seed = false;
        for (auto& [k, v] : rr.code->spec.metadata)
            if (k == "seed" && v == "11") has_seed = true;
        CHECK(has_seed);
    } else {
        CHECK(rand3.exit_code == 3);
    }

    auto noseed = run_cli("build --mode detect --L 16 --d 3 --algorithm 3 --out " + dir + "/x.lh");
    CHECK(noseed.exit_code == 1);

    // a seed whose draw fails the distance gate exits with 3
    uint64_t failing_seed = 0;
    bool found = false;
    for (uint64_t s = 0; s < 50 && !found; ++s)
        if (!construct_alg3({10, 2, 0, s}).ok()) {
            failing_seed = s;
            found = true;
        }
    REQUIRE(found);
    auto fail3 = run_cli("build --mode detect --L 10 --d 2 --algorithm 3 --delta 0 --seed " +
                         std::to_string(failing_seed) + " --out " + dir + "/f.lh");
    CHECK(fail3.exit_code == 3);
}

TEST_CASE("cli reports no solution with exit 2") {
    std::string dir = testutil::scratch_dir();
    write_file(dir + "/full.dist", "L 3\n100\n010\n001\n110\n101\n011\n111\n");
    auto res = run_cli("build --mode detect --distortions " + dir + "/full.dist --out " + dir + "/no.lh");
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli verify") {
    std::string dir = testutil::scratch_dir();
    std::string code = dir + "/h.lh";
    REQUIRE(run_cli("build --mode correct --L 7 --d 3 --algorithm 1 --out " + code).exit_code == 0);

    auto good = run_cli("verify --code " + code + " --exhaustive");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("result: PASS") != std::string::npos);

    auto machine = run_cli("verify --code " + code + " --machine");
    CHECK(machine.exit_code == 0);
    CHECK(machine.output.find("result=pass") != std::string::npos);

    // corrupt one table digit: the file no longer validates
    std::string text = read_file(code);
    size_t pos = text.find("\n110");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '0';
    write_file(code, text);
    auto bad = run_cli("verify --code " + code);
    CHECK(bad.exit_code == 4);
}

TEST_CASE("cli bounds") {
    auto res = run_cli("bounds --L 7 --d 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("vg_bound=16") != std::string::npos);
    CHECK(res.output.find("l_vg=3") != std::string::npos);
    CHECK(res.output.find("l_improved=3") != std::string::npos);

    auto improved = run_cli("bounds --L 8 --d 5 --delta 2");
    CHECK(improved.exit_code == 0);
    CHECK(improved.output.find("l_vg=7") != std::string::npos);
    CHECK(improved.output.find("l_improved=6") != std::string::npos);
    CHECK(improved.output.find("improvement=yes") != std::string::npos);
    CHECK(improved.output.find("zsize=10") != std::string::npos);
}

TEST_CASE("cli simulate is reproducible and never misses in-model errors") {
    std::string dir = testutil::scratch_dir();
    std::string code = dir + "/d.lh";
    REQUIRE(run_cli("build --mode detect --L 6 --burst 2:strict --out " + code).exit_code == 0);

    std::string args = "simulate --code " + code + " --burst 2:strict --frames 5000 --error-prob 0.3 --seed 9";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("missed=0\n") != std::string::npos);
    CHECK(a.output.find("frames=5000") != std::string::npos);

    // corrupted == detected for in-model simulation
    auto get = [&](const std::string& key) {
        size_t p = a.output.find(key + "=");
        REQUIRE(p != std::string::npos);
        return std::stoull(a.output.substr(p + key.size() + 1));
    };
    CHECK(get("corrupted") == get("detected"));
    CHECK(get("corrupted") > 0);
}

TEST_CASE("cli usage errors exit with 1") {
    CHECK(run_cli("build --mode detect --out /tmp/x.lh").exit_code == 1);  // no model
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("build --mode detect --L 6 --d 3 --burst 2 --out /tmp/x.lh").exit_code == 1);
    CHECK(run_cli("simulate --code /nonexistent --weight 1 --frames 10 --error-prob 0.5").exit_code == 1);
}
