#include "hohoho/transpile.hpp"

#include <random>

#include "doctest.h"
#include "program_gen.hpp"
#include "support.hpp"

using namespace hohoho;

TEST_CASE("language identification") {
    CHECK(lang_from_extension("hello.bf") == Lang::bf);
    CHECK(lang_from_extension("dir/prog.hohoho") == Lang::hohoho);
    CHECK(lang_from_extension("x.shoho") == Lang::simple_hoho);
    CHECK(lang_from_extension("x.ook") == Lang::ook);
    CHECK_FALSE(lang_from_extension("noext").has_value());
    CHECK(lang_from_name("BF") == Lang::bf);
    CHECK(lang_from_name("Ook!") == Lang::ook);
    CHECK(lang_from_name("simple-hoho") == Lang::simple_hoho);
    CHECK(lang_from_name("simplehoho") == Lang::simple_hoho);
    CHECK(lang_from_name("shoho") == Lang::simple_hoho);
    CHECK_FALSE(lang_from_name("cobol").has_value());
}

TEST_CASE("language bindings") {
    CHECK(language_info(Lang::hohoho).width == 3);
    CHECK(language_info(Lang::hohoho).command_set->name == "full8");
    CHECK(language_info(Lang::simple_hoho).width == 2);
    CHECK(language_info(Lang::simple_hoho).command_set->name == "loopless4");
    CHECK(language_info(Lang::ook).width == 2);
    CHECK(language_info(Lang::ook).alphabet->size() == 3);
    CHECK_FALSE(language_info(Lang::ook).has_advanced);
}

TEST_CASE("transpile") {
    CHECK(transpile(Lang::bf, Lang::hohoho, ">.") == "Ho! Hohoho! Hoho!");
    CHECK(transpile(Lang::bf, Lang::hohoho, ">.", Notation::standard) == "HoHoho hoHoho");
    CHECK(transpile(Lang::hohoho, Lang::bf, "Ho! Hohoho! Hoho!") == ">.");
    CHECK(transpile(Lang::bf, Lang::ook, ">") == "Ook. Ook?");
    CHECK(transpile(Lang::ook, Lang::bf, "Ook. Ook?") == ">");

    SUBCASE("empty programs stay empty") {
        for (Lang dst : all_langs()) {
            CHECK(transpile(Lang::bf, dst, "").empty());
        }
    }
    SUBCASE("comments are dropped") {
        CHECK(transpile(Lang::bf, Lang::bf, "inc + then output .") == "+.");
    }
    SUBCASE("loop-bearing programs cannot reach Simple Hoho") {
        try {
            transpile(Lang::bf, Lang::simple_hoho, "[-]");
            FAIL("expected SubsetViolationError");
        } catch (const SubsetViolationError& e) {
            std::string msg = e.what();
            CHECK(msg.find("LoopOpen@0") != std::string::npos);
            CHECK(msg.find("LoopClose@2") != std::string::npos);
        }
    }
    SUBCASE("parse errors propagate") {
        CHECK_THROWS_AS(transpile(Lang::hohoho, Lang::bf, "Hox"), UnknownSyllableError);
        CHECK_THROWS_AS(transpile(Lang::hohoho, Lang::bf, "hoho!"), MalformedTokenError);
        CHECK_THROWS_AS(transpile(Lang::hohoho, Lang::bf, "HoHo"), LengthNotDivisibleError);
    }
}

TEST_CASE("fmt") {
    CHECK(fmt("HoHoho hoHoho", Lang::hohoho, Notation::advanced) == "Ho! Hohoho! Hoho!");
    CHECK(fmt("Ho!", Lang::hohoho, Notation::standard) == "Ho");
    CHECK(fmt("Ook.Ook?Ook.Ook.", Lang::ook, Notation::standard) == "Ook. Ook? Ook. Ook.");
    CHECK_THROWS_AS(fmt("Ook.", Lang::ook, Notation::advanced), DomainError);

    SUBCASE("fmt is idempotent") {
        const char* samples[] = {"Ho! Hohoho! Hoho!", "HoHoho hoHoho", "Hoho hoho", ""};
        for (const char* s : samples) {
            for (Notation n : {Notation::standard, Notation::advanced}) {
                std::string once = fmt(s, Lang::hohoho, n);
                CHECK(fmt(once, Lang::hohoho, n) == once);
            }
        }
    }
    SUBCASE("fmt does not decode, so odd atom counts are fine") {
        CHECK(fmt("Ho ho", Lang::hohoho, Notation::advanced) == "Hoho!");
    }
}

TEST_CASE("loopfree_check") {
    SUBCASE("the Simple Hoho corpus is clean by construction") {
        std::string corpus = testsupport::read_file(testsupport::asset("paper_hello.shoho"));
        auto report = loopfree_check(corpus, Lang::simple_hoho);
        CHECK(report.clean());
        CHECK(report.command_count == 366);
        CHECK(report.render().empty());
    }
    SUBCASE("the Hohoho! corpus uses loops and backward moves") {
        std::string corpus = testsupport::read_file(testsupport::asset("paper_hello_repaired.hohoho"));
        auto report = loopfree_check(corpus, Lang::hohoho);
        CHECK_FALSE(report.clean());
        std::size_t lefts = 0, opens = 0, closes = 0;
        for (const auto& v : report.violations) {
            if (v.cmd == Command::move_left) ++lefts;
            if (v.cmd == Command::loop_open) ++opens;
            if (v.cmd == Command::loop_close) ++closes;
        }
        CHECK(lefts == 6);
        CHECK(opens == 1);
        CHECK(closes == 1);
        std::string rendered = report.render();
        CHECK(rendered.find("LoopOpen") != std::string::npos);
        CHECK(rendered.find("atoms 30..32") != std::string::npos);  // the [ at command 10
    }
    SUBCASE("empty program is clean") {
        CHECK(loopfree_check("", Lang::bf).clean());
    }
}

TEST_CASE("round trips and semantic preservation") {
    std::mt19937 rng(20161224);
    MachineConfig cfg;
    cfg.step_limit = 50000;

    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        auto cmds = testsupport::random_program(rng, 200);
        std::string bf_text = print_bf(cmds);
        std::string input = testsupport::random_input(rng, 6);
        ExecResult base = run(compile(cmds), input, cfg);

        for (Lang x : {Lang::ook, Lang::hohoho}) {
            std::string there = transpile(Lang::bf, x, bf_text);
            std::string back = transpile(x, Lang::bf, there);
            CHECK(back == bf_text);  // command-exact round trip

            ExecResult again = run(compile(parse_program(x, there)), input, cfg);
            CHECK(again == base);  // byte-identical behaviour, halts included

            // length law: width atoms per command
            const LanguageInfo& info = language_info(x);
            AtomSeq atoms = parse_standard(fmt(there, x, Notation::standard), *info.alphabet);
            CHECK(atoms.atoms.size() == cmds.size() * info.width);
        }
        ++checked;
    }
    CHECK(checked == 60);

    SUBCASE("loopless programs round trip through Simple Hoho") {
        for (int iter = 0; iter < 30; ++iter) {
            auto cmds = testsupport::random_program(rng, 100, /*with_loops=*/false);
            std::erase(cmds, Command::move_left);
            std::erase(cmds, Command::input);
            std::string bf_text = print_bf(cmds);
            CHECK(transpile(Lang::simple_hoho, Lang::bf,
                            transpile(Lang::bf, Lang::simple_hoho, bf_text)) == bf_text);
        }
    }
}
