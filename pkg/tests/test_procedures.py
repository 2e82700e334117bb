import pytest

from mesomath.errors import (
    MissingConfig,
    ScriptSyntax,
    UnknownName,
    UnknownOp,
)
from mesomath.metrology import to_number
from mesomath.procedures import (
    disk_area,
    parse_script,
    run,
    run_file,
    shipped_corpus_dir,
    verify_corpus,
)
from mesomath.textio import parse_spvn as fn

CORPUS = shipped_corpus_dir()


def corpus_text(name: str) -> str:
    return (CORPUS / name).read_text(encoding="utf-8")


class TestDiskArea:
    def test_attested(self):
        assert disk_area(fn("3")) == fn("45")

    def test_unit_perimeter(self):
        assert disk_area(fn("1")) == fn("5")

    def test_oracle(self):
        # 36 * 5 = 180, normalizing to 3
        assert disk_area(fn("6")) == fn("3")


class TestParseScript:
    def test_trench_problem_shape(self):
        s = parse_script(corpus_text("ybc4663-1.tab"))
        assert s.tablet == "YBC 4663 #1"
        assert len(s.givens) == 5
        assert len(s.steps) == 4
        assert len(s.answers) == 1

    def test_empty_file(self):
        with pytest.raises(ScriptSyntax):
            parse_script("")

    def test_undefined_name(self):
        text = 'tablet "x"\nstep mul width width expect 1 as y\n'
        with pytest.raises(UnknownName):
            parse_script(text)

    def test_unknown_op(self):
        text = 'tablet "x"\ngiven-spvn a 2\nstep frobnicate a expect 1\n'
        with pytest.raises(UnknownOp):
            parse_script(text)

    def test_hash_inside_quotes(self):
        s = parse_script('tablet "CBS 1215 #20"\ngiven-spvn n 2\n')
        assert s.tablet == "CBS 1215 #20"

    def test_comments_and_blanks(self):
        s = parse_script("# nothing\n\ntablet \"t\"\ngiven-spvn a 5  # inline\n")
        assert s.givens[0].expect == fn("5")


class TestRunLinear:
    def test_trench_cost(self):
        t = run(parse_script(corpus_text("ybc4663-1.tab")))
        steps = [r for r in t.records if r.kind == "step"]
        assert [str(r.computed) for r in steps] == ["7:30", "45", "4:30", "9"]
        assert t.passed

    def test_trench_depth(self):
        t = run(parse_script(corpus_text("ybc4663-4.tab")))
        steps = [str(r.computed) for r in t.records if r.kind == "step"]
        assert steps == ["7:30", "45", "1:30", "40", "6"]
        answers = [r for r in t.records if r.kind == "answer"]
        assert str(answers[0].computed) == "1/2 ninda"
        assert t.passed

    def test_square_surface(self):
        t = run(parse_script(corpus_text("um29-15-192.tab")))
        assert t.passed
        answer = [r for r in t.records if r.kind == "answer"][0]
        assert str(answer.computed) == "1/3 še"

    def test_rederive_expectations(self):
        # strip every annotation; the computation alone must reproduce them
        for name in ("um29-15-192.tab", "ybc4663-1.tab", "ybc4663-4.tab"):
            t = run(parse_script(corpus_text(name)))
            for r in t.records:
                if r.expected is not None:
                    assert r.matched, (name, r.name)

    def test_answer_stage_soundness(self):
        t = run(parse_script(corpus_text("ybc4663-4.tab")))
        final = {r.name: r for r in t.records}
        reading = final["depth"]  # answer record overwrote step record
        assert to_number(reading.computed) == fn("6")


class TestRunReciprocalExercises:
    def test_scribal_error_is_note_not_failure(self):
        t = run(parse_script(corpus_text("ni10241.tab")))
        assert t.passed
        notes = t.scribal_notes()
        assert len(notes) == 1
        assert notes[0].name == "quotient"
        assert str(notes[0].attested) == "41"
        assert str(notes[0].expected) == "40"

    def test_long_reciprocal_trace_products(self):
        t = run(parse_script(corpus_text("cbs1215-20.tab")))
        assert t.passed
        rec = [r for r in t.records if r.name == "r"][0]
        fact = rec.factorization
        assert [str(f) for f in fact.factors] == ["6:40", "40", "16", "16", "16"]
        from mesomath.recip import running_products

        assert [str(p) for p in running_products(fact)] == [
            "14:3:45",
            "52:44:3:45",
            "1:19:6:5:37:30",
            "11:51:54:50:37:30",
        ]

    def test_disk(self):
        t = run(parse_script(corpus_text("ybc7302.tab")))
        assert t.passed
        steps = [str(r.computed) for r in t.records if r.kind == "step"]
        assert steps == ["9", "45"]


class TestRunQuadratic:
    def test_config_a_trace(self):
        t = run(parse_script(corpus_text("ybc4663-7.tab")), "A")
        assert t.passed
        by_name = {r.name: r for r in t.records if r.kind == "step"}
        assert str(by_name["halfsum"].computed.digits) == "3:15"
        assert str(by_name["halfsumsq"].computed.digits) == "10:33:45"
        assert str(by_name["gap"].computed.digits) == "3:3:45"
        assert str(by_name["root"].computed.digits) == "1:45"
        assert str(by_name["width"].computed.digits) == "1:30"
        answers = [r for r in t.records if r.kind == "answer"]
        assert [str(r.computed) for r in answers] == ["5 ninda", "1 1/2 ninda"]

    def test_configuration_invariance(self):
        script = parse_script(corpus_text("ybc4663-7.tab"))
        traces = {c.name: run(script, c.name) for c in script.configurations}
        assert set(traces) == {"A", "B", "C"}
        a, b, c = traces["A"], traces["B"], traces["C"]
        for ra, rb, rc in zip(a.records, b.records, c.records):
            if ra.kind == "answer":
                assert ra.computed == rb.computed == rc.computed
            else:
                assert (
                    ra.computed.digits == rb.computed.digits == rc.computed.digits
                )

    def test_missing_config(self):
        with pytest.raises(MissingConfig):
            run(parse_script(corpus_text("ybc4663-7.tab")))

    def test_unknown_config(self):
        with pytest.raises(UnknownName):
            run(parse_script(corpus_text("ybc4663-7.tab")), "Z")


class TestVerifyCorpus:
    def test_shipped_corpus_passes(self):
        summary = verify_corpus(CORPUS)
        assert summary.passed
        assert len(summary.reports) == 7
        assert [r.tablet for r in summary.reports] == sorted(
            r.tablet for r in summary.reports
        )

    def test_corrupted_expectation_fails_only_that_tablet(self, tmp_path):
        good = corpus_text("ybc4663-1.tab")
        (tmp_path / "good.tab").write_text(good, encoding="utf-8")
        (tmp_path / "bad.tab").write_text(
            good.replace("expect 7:30", "expect 7:31").replace(
                'tablet "YBC 4663 #1"', 'tablet "corrupt"'
            ),
            encoding="utf-8",
        )
        summary = verify_corpus(tmp_path)
        assert not summary.passed
        by_id = {r.tablet: r for r in summary.reports}
        assert by_id["YBC 4663 #1"].passed
        assert not by_id["corrupt"].passed

    def test_empty_directory_warns(self, tmp_path):
        summary = verify_corpus(tmp_path)
        assert summary.passed
        assert summary.warnings


class TestRunFile:
    def test_run_file(self):
        t = run_file(CORPUS / "ybc7302.tab")
        assert t.passed
