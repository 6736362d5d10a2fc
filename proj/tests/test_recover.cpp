#include "hohoho/recover.hpp"

#include <cstdio>
#include <unistd.h>

#include "doctest.h"
#include "support.hpp"

using namespace hohoho;

namespace {

RecoveryProblem hohoho_problem(const std::string& corpus_file) {
    RecoveryProblem p{Alphabet::ho(),
                      3,
                      CommandSet::full8(),
                      read_mapping_file(testsupport::asset("anchors_hohoho.map")),
                      testsupport::read_file(testsupport::asset(corpus_file)),
                      std::nullopt,
                      "Hello World!",
                      {},
                      false};
    return p;
}

RecoveryProblem simple_hoho_problem() {
    RecoveryProblem p{Alphabet::ho(),
                      2,
                      CommandSet::loopless4(),
                      Mapping(Alphabet::ho(), 2),
                      testsupport::read_file(testsupport::asset("paper_hello.shoho")),
                      std::nullopt,
                      "Hello World!",
                      {},
                      false};
    return p;
}

}  // namespace

TEST_CASE("the verbatim Hohoho! listing admits no mapping and the diagnostics localize the defect") {
    try {
        recover(hohoho_problem("paper_hello.hohoho"));
        FAIL("expected NoSolutionError");
    } catch (const NoSolutionError& e) {
        const Diagnostics& d = e.diagnostics;
        CHECK(d.candidates == 720);  // 6 unanchored commands over 6 unused codes
        CHECK(d.survivor_count == 0);
        CHECK(d.corpus_commands == 109);
        CHECK(d.count(FailureClass::decode_error) == 0);
        CHECK(d.count(FailureClass::bracket_error) == 672);
        CHECK(d.count(FailureClass::tape_underflow) == 36);
        CHECK(d.count(FailureClass::wrong_output) == 12);
        CHECK(d.count(FailureClass::step_limit) == 0);
        CHECK(d.max_matched_prefix == 0);

        // The listing's lone defect: command 41 should close the loop, but its
        // code collides with MoveLeft's. The candidates extending the true
        // table all underflow exactly there, before emitting a single byte.
        REQUIRE(d.first_divergent_command.has_value());
        CHECK(*d.first_divergent_command == 41);
        CHECK(d.first_divergent_class == FailureClass::tape_underflow);
        CHECK(d.first_divergent_candidates == 12);

        // Corroboration: no candidate can make even the first output byte.
        REQUIRE(d.first_output_mismatch_command.has_value());
        CHECK(*d.first_output_mismatch_command == 45);
        CHECK(d.expected_byte_at_mismatch == static_cast<std::uint8_t>('H'));

        std::string report = d.render();
        CHECK(report.find("first divergent command: index 41 (atoms 123..125)") != std::string::npos);
        CHECK(report.find("candidates examined: 720") != std::string::npos);
        CHECK(report.find("'H'") != std::string::npos);
    }
}

TEST_CASE("the repaired Hohoho! listing pins the canonical table uniquely") {
    RecoverySolution sol = recover(hohoho_problem("paper_hello_repaired.hohoho"));
    REQUIRE(sol.mappings.size() == 1);
    const Mapping& m = sol.mappings.front();
    CHECK(m == hohoho_mapping());
    CHECK(m.total_for(CommandSet::full8()));

    CHECK(sol.diagnostics.candidates == 720);
    CHECK(sol.diagnostics.survivor_count == 1);
    CHECK(sol.diagnostics.count(FailureClass::decode_error) == 0);
    CHECK(sol.diagnostics.count(FailureClass::bracket_error) == 696);
    CHECK(sol.diagnostics.count(FailureClass::tape_underflow) == 6);
    CHECK(sol.diagnostics.count(FailureClass::wrong_output) == 9);
    CHECK(sol.diagnostics.count(FailureClass::step_limit) == 8);

    SUBCASE("anchors are extended, not modified") {
        std::uint8_t right[] = {0, 0, 1};
        std::uint8_t out[] = {1, 0, 1};
        CHECK(m.find(right) == Command::move_right);
        CHECK(m.find(out) == Command::output);
    }
    SUBCASE("replaying the corpus through the public path") {
        AtomSeq atoms = parse_advanced(
            testsupport::read_file(testsupport::asset("paper_hello_repaired.hohoho")));
        ExecResult r = run(compile(decode(atoms, m)), {});
        CHECK(r.halt == Halt::finished);
        CHECK(r.output == "Hello World!");
        CHECK(r.steps == 388);
    }
    SUBCASE("the anchor sentence reproduces end to end") {
        AtomSeq anchor_text = parse_standard("HoHoho hoHoho", Alphabet::ho());
        CHECK(decode(anchor_text, m) == parse_bf(">."));
    }
    SUBCASE("determinism") {
        RecoverySolution again = recover(hohoho_problem("paper_hello_repaired.hohoho"));
        REQUIRE(again.mappings.size() == 1);
        CHECK(again.mappings.front() == m);
        CHECK(again.diagnostics.candidates == sol.diagnostics.candidates);
        CHECK(again.diagnostics.class_counts == sol.diagnostics.class_counts);
    }
    SUBCASE("variant semantics do not disturb the replay") {
        for (const auto& check : check_variants(m, hohoho_problem("paper_hello_repaired.hohoho"))) {
            CHECK(check.reproduced);
        }
    }
}

TEST_CASE("Simple Hoho recovery: 24 candidates, one survivor") {
    RecoverySolution sol = recover(simple_hoho_problem());
    REQUIRE(sol.mappings.size() == 1);
    const Mapping& m = sol.mappings.front();
    CHECK(m == simple_hoho_mapping());
    CHECK(sol.diagnostics.candidates == 24);
    CHECK(sol.diagnostics.count(FailureClass::wrong_output) == 23);
    CHECK(sol.diagnostics.count(FailureClass::bracket_error) == 0);

    SUBCASE("the decoded corpus is loop-free and replays exactly") {
        AtomSeq atoms =
            parse_advanced(testsupport::read_file(testsupport::asset("paper_hello.shoho")));
        auto cmds = decode(atoms, m);
        CHECK(cmds.size() == 366);
        CHECK(check_subset(cmds, CommandSet::loopless4()).empty());
        ExecResult r = run(compile(cmds), {});
        CHECK(r.halt == Halt::finished);
        CHECK(r.output == "Hello World!");
        CHECK(r.steps == 366);  // straight-line: one step per command
    }
}

TEST_CASE("fully anchored problems have a search space of one") {
    RecoveryProblem p = simple_hoho_problem();
    p.anchors = simple_hoho_mapping();
    RecoverySolution sol = recover(p);
    CHECK(sol.diagnostics.candidates == 1);
    REQUIRE(sol.mappings.size() == 1);
    CHECK(sol.mappings.front() == simple_hoho_mapping());

    SUBCASE("and report a clean mismatch when the expectation is wrong") {
        p.expected_output = "Hello Worlds!";
        try {
            recover(p);
            FAIL("expected NoSolutionError");
        } catch (const NoSolutionError& e) {
            CHECK(e.diagnostics.candidates == 1);
            CHECK(e.diagnostics.count(FailureClass::wrong_output) == 1);
            CHECK(e.diagnostics.max_matched_prefix == 11);  // "Hello World" matches
            CHECK(e.diagnostics.expected_byte_at_mismatch == static_cast<std::uint8_t>('s'));
        }
    }
}

TEST_CASE("bracket-only failures still localize") {
    RecoveryProblem p{Alphabet::ho(), 3,          CommandSet::full8(), hohoho_mapping(),
                      "Hohoho",       std::nullopt, "x",               {},
                      false};
    try {
        recover(p);
        FAIL("expected NoSolutionError");
    } catch (const NoSolutionError& e) {
        CHECK(e.diagnostics.candidates == 1);
        CHECK(e.diagnostics.count(FailureClass::bracket_error) == 1);
        CHECK(e.diagnostics.first_divergent_command == 0);
        CHECK(e.diagnostics.first_divergent_class == FailureClass::bracket_error);
    }
}

TEST_CASE("corpus validation") {
    RecoveryProblem p = simple_hoho_problem();
    SUBCASE("unparseable corpus") {
        p.corpus_text = "Hoxo";
        CHECK_THROWS_AS(recover(p), CorpusParseError);
    }
    SUBCASE("atom count must divide by the width") {
        p.corpus_text = "Ho ho Ho";
        p.width = 2;
        CHECK_THROWS_AS(recover(p), CorpusParseError);
    }
    SUBCASE("anchor commands must lie inside the command set") {
        Mapping anchors(Alphabet::ho(), 2);
        anchors.add({0, 0}, Command::loop_open);
        p.anchors = anchors;
        CHECK_THROWS_AS(recover(p), CorpusParseError);
    }
}

TEST_CASE("prefix_ok relaxation") {
    RecoveryProblem p = simple_hoho_problem();
    p.anchors = simple_hoho_mapping();

    SUBCASE("expected prefix of the real output") {
        p.expected_output = "Hello";
        CHECK_THROWS_AS(recover(p), NoSolutionError);
        p.prefix_ok = true;
        RecoverySolution sol = recover(p);
        CHECK(sol.mappings.size() == 1);
    }
    SUBCASE("expected extension of the real output") {
        p.expected_output = "Hello World!!";
        CHECK_THROWS_AS(recover(p), NoSolutionError);
        p.prefix_ok = true;
        RecoverySolution sol = recover(p);
        CHECK(sol.mappings.size() == 1);
    }
}

TEST_CASE("export_mapping") {
    std::string path = std::string("/tmp/hohoho_export_test_") + std::to_string(::getpid()) + ".map";
    export_mapping(hohoho_mapping(), CommandSet::full8(), path);
    CHECK(read_mapping_file(path) == hohoho_mapping());
    std::remove(path.c_str());

    SUBCASE("partial mappings are rejected") {
        Mapping anchors = read_mapping_file(testsupport::asset("anchors_hohoho.map"));
        CHECK_THROWS_AS(export_mapping(anchors, CommandSet::full8(), path), DomainError);
    }
}
