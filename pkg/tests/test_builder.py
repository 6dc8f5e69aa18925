from pathlib import Path

import pytest

from ckmetrics.errors import InputPathError
from ckmetrics.models import export_model, validate
from ckmetrics.parser import analyze_paths, analyze_sources, build_model, discover_files, parse_source


def _calls(model, fqn, name, arity=0):
    method = model.get(fqn).method(name, arity)
    return sorted((c.target_class, c.target_method, c.arity, c.resolved) for c in method.calls)


def _uses(model, fqn, name, arity=0):
    return set(model.get(fqn).method(name, arity).attributes_used)


def test_corpus_matches_golden_model(corpus_dir, golden_model):
    model = analyze_paths([str(corpus_dir)])
    assert validate(model) == []
    assert export_model(model) == golden_model


def test_corpus_diagnostics(corpus_dir):
    model = analyze_paths([str(corpus_dir)])
    found = sorted((Path(d.location.file).name, d.severity, d.message) for d in model.resolution_diagnostics)
    assert found == [
        ("Broken.java", "error", "lambda expressions are not supported"),
        ("Cart.java", "warning", "'for' statements are not supported; skipped"),
        ("Cart.java", "warning", "unresolved call reset/0: no method reset/0 in com.acme.shop.Cart or its ancestors"),
        ("Main.java", "warning", "wildcard import 'java.util.*' is not supported; ignored"),
        ("Shop.java", "warning", "generic type arguments are not supported; ignored"),
        ("Shop.java", "warning", "unresolved call println/1: the receiver's type is unknown"),
    ]
    broken = next(d for d in model.resolution_diagnostics if d.is_error)
    assert (broken.location.line, broken.location.column) == (11, 22)


def test_worker_count_does_not_change_the_model(corpus_dir):
    serial = analyze_paths([str(corpus_dir)], jobs=1)
    parallel = analyze_paths([str(corpus_dir)], jobs=4)
    assert export_model(parallel) == export_model(serial)
    assert parallel.resolution_diagnostics == serial.resolution_diagnostics


def test_discovery(corpus_dir, tmp_path):
    files = discover_files([str(corpus_dir)])
    assert len(files) == 12
    assert files == sorted(files)
    assert discover_files([str(corpus_dir), files[0]]) == files

    with pytest.raises(InputPathError):
        discover_files([str(tmp_path / "missing")])

    empty = analyze_paths([str(tmp_path)])
    assert empty.classes == ()
    (warning,) = empty.resolution_diagnostics
    assert warning.message == "no '*.java' files found"


def test_discovered_files_are_not_walked_again(corpus_dir, golden_model):
    files = discover_files([str(corpus_dir)])
    assert export_model(analyze_paths([str(corpus_dir)], files=files)) == golden_model

    only_ids = [f for f in files if f.endswith("util/Ids.java")]
    model = analyze_paths([str(corpus_dir)], files=only_ids)
    assert [c.fqn for c in model.internal_classes] == ["com.acme.util.Ids"]


def test_undecodable_file_is_skipped(tmp_path):
    (tmp_path / "Good.java").write_text("class Good { }", encoding="utf-8")
    (tmp_path / "Bad.java").write_bytes(b"class Bad { \xff }")
    model = analyze_paths([str(tmp_path)])
    assert [c.fqn for c in model.internal_classes] == ["Good"]
    (problem,) = model.resolution_diagnostics
    assert problem.is_error and "not valid utf-8" in problem.message


def test_type_resolution_order():
    model = analyze_sources({
        "a/A.java": (
            "package a;\n"
            "import b.Other;\n"
            "import b.Local;\n"
            "class A { Local l; Other o; Peer p; Missing m; }\n"
            "class Local { }\n"
        ),
        "a/Other.java": "package a;\nclass Other { }\n",
        "a/Peer.java": "package a;\nclass Peer { }\n",
        "b/Other.java": "package b;\npublic class Other { }\n",
        "b/Local.java": "package b;\npublic class Local { }\n",
    })
    types = {f.name: f.declared_type for f in model.get("a.A").fields}
    assert types == {"l": "a.Local", "o": "b.Other", "p": "a.Peer", "m": "Missing"}
    missing = model.get("Missing")
    assert missing.is_external and missing.package == ""
    assert model.packages == ["a", "b"]


def test_order_independent():
    sources = {
        "z/Z.java": "package z;\nimport a.A;\npublic class Z extends A { void m() { run(); } }\n",
        "a/A.java": "package a;\npublic class A { public void run() { } }\n",
    }
    units = [parse_source(text, name) for name, text in sources.items()]
    forward = build_model(units)
    backward = build_model(list(reversed(units)))
    assert export_model(forward) == export_model(backward)
    assert _calls(forward, "z.Z", "m") == [("a.A", "run", 0, True)]


def test_duplicate_class_keeps_first_file():
    model = analyze_sources({
        "one/A.java": "package p;\nclass A { int first; }\n",
        "two/A.java": "package p;\nclass A { int second; }\n",
    })
    assert [f.name for f in model.get("p.A").fields] == ["first"]
    (error,) = model.resolution_diagnostics
    assert error.is_error and error.location.file == "two/A.java"
    assert error.message.startswith("duplicate class 'p.A' (first declared at one/A.java:2:1)")


def test_inheritance_cycle_edge_is_dropped():
    model = analyze_sources({"C.java": "class A extends B { }\nclass B extends A { }\n"})
    assert model.get("A").parents == ("B",)
    assert model.get("B").parents == ()
    (error,) = model.resolution_diagnostics
    assert error.message == "inheritance cycle: B extends A closes a cycle; edge dropped"
    assert validate(model) == []


def test_attribute_uses():
    model = analyze_sources({"A.java": (
        "class P { int shared; }\n"
        "class A extends P {\n"
        "  int x;\n"
        "  void param(int x) { x = 2; }\n"
        "  void local() { int x = 1; if (x > 0) { shared++; } }\n"
        "  void qualified() { this.x = 3; super.shared = 4; }\n"
        "  void other(A a) { a.x = 5; }\n"
        "  void bare() { x++; }\n"
        "}\n"
    )})
    assert _uses(model, "A", "param", 1) == set()
    assert _uses(model, "A", "local") == {"shared"}
    assert _uses(model, "A", "qualified") == {"x", "shared"}
    assert _uses(model, "A", "other", 1) == set()
    assert _uses(model, "A", "bare") == {"x"}


def test_call_resolution():
    model = analyze_sources({
        "A.java": (
            "import java.util.List;\n"
            "class U { static int twice(int v) { return v; } }\n"
            "class B { B next() { return this; } void go() { } }\n"
            "class A {\n"
            "  B b;\n"
            "  List xs;\n"
            "  void chain() { b.next().go(); }\n"
            "  void external() { xs.get(0).run(); }\n"
            "  void statics() { U.twice(2); }\n"
            "  void unknown() { thing.go(); }\n"
            "  void local() { B other = new B(); other.go(); go(); }\n"
            "  void go() { }\n"
            "}\n"
        ),
    })
    assert _calls(model, "A", "chain") == [("B", "go", 0, True), ("B", "next", 0, True)]
    assert _uses(model, "A", "chain") == {"b"}
    assert _calls(model, "A", "external") == [("java.util.List", "get", 1, True)]
    assert _calls(model, "A", "statics") == [("U", "twice", 1, True)]
    assert _calls(model, "A", "unknown") == [("?", "go", 0, False)]
    assert _calls(model, "A", "local") == [("A", "go", 0, True), ("B", "go", 0, True)]
    messages = [d.message for d in model.resolution_diagnostics]
    assert messages == ["unresolved call go/0: unknown receiver 'thing'"]


def test_inherited_and_external_targets():
    model = analyze_sources({"A.java": (
        "import java.io.Writer;\n"
        "class P { void base() { } }\n"
        "class C extends P { void m() { base(); } }\n"
        "class W extends Writer { void m() { flush(); } }\n"
    )})
    assert _calls(model, "C", "m") == [("P", "base", 0, True)]
    assert _calls(model, "W", "m") == [("java.io.Writer", "flush", 0, True)]
    assert model.get("java.io.Writer").is_external


def test_constructor_calls():
    model = analyze_sources({"A.java": (
        "class P { P(int x) { } P() { this(0); } }\n"
        "class C extends P { C() { super(1); } }\n"
        "class Q { }\n"
        "class D extends Q { D() { super(); } }\n"
        "class E extends Q { E() { super(5); } }\n"
    )})
    assert _calls(model, "P", "P") == [("P", "P", 1, True)]
    assert _calls(model, "C", "C") == [("P", "P", 1, True)]
    assert _calls(model, "D", "D") == []
    assert _calls(model, "E", "E") == [("?", "Q", 1, False)]
    (warning,) = model.resolution_diagnostics
    assert warning.message == "unresolved call super(...)/1: no such constructor in Q"


def test_duplicate_members_keep_first():
    model = analyze_sources({"A.java": "class A { int x; long x; void m() { } int m() { return 1; } }\n"})
    info = model.get("A")
    assert [(f.name, f.declared_type) for f in info.fields] == [("x", "int")]
    assert [(m.name, m.return_type) for m in info.methods] == [("m", "void")]
    assert len(model.resolution_diagnostics) == 2
