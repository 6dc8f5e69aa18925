import pytest

from ckmetrics.parser import parse_source, parse_unit, tokenize
from ckmetrics.parser.syntax import Call, ConstructorCall, ExprStmt, FieldAccess, LocalDecl, Name, Return, This

SHAPES = """
package shapes.flat;

import shapes.Shape;

public class Circle extends Base implements Shape, Comparable {
    private static final double PI = 3.14;
    private double radius, area;

    public Circle(double radius) {
        super();
        this.radius = radius;
    }

    public double area() {
        double r = radius;
        return PI * r * r;
    }

    abstract void draw(Canvas canvas, int... layers);
}

interface Named {
    String name();
}
"""


def test_declarations():
    unit = parse_source(SHAPES, "Circle.java")
    assert unit.package == "shapes.flat"
    assert unit.imports == ("shapes.Shape",)
    assert unit.diagnostics == ()

    circle, named = unit.type_decls
    assert (circle.kind, circle.name) == ("class", "Circle")
    assert [t.name for t in circle.extends] == ["Base"]
    assert [t.name for t in circle.implements] == ["Shape", "Comparable"]
    assert [(f.name, f.type.name, f.is_static) for f in circle.fields] == [
        ("PI", "double", True),
        ("radius", "double", False),
        ("area", "double", False),
    ]

    constructor, area, draw = circle.methods
    assert constructor.is_constructor and constructor.arity == 1
    assert area.return_type.name == "double" and area.arity == 0
    assert draw.body is None
    assert [(p.type.name, p.name) for p in draw.params] == [("Canvas", "canvas"), ("int", "layers")]

    assert (named.kind, named.name) == ("interface", "Named")
    assert named.methods[0].body is None


def test_method_bodies():
    unit = parse_source(SHAPES, "Circle.java")
    constructor, area, _ = unit.type_decls[0].methods

    first, second = constructor.body.statements
    assert isinstance(first, ExprStmt) and isinstance(first.expr, ConstructorCall)
    assert first.expr.kind == "super" and first.expr.args == ()
    target = second.expr.operands[0]
    assert isinstance(target, FieldAccess) and isinstance(target.target, This) and target.name == "radius"

    local, returned = area.body.statements
    assert isinstance(local, LocalDecl)
    assert local.names[0][0] == "r" and isinstance(local.names[0][1], Name)
    assert isinstance(returned, Return)


def test_calls_and_chains():
    unit = parse_source("class A { void m() { a.b().c(1, 2); run(); } }")
    chain, bare = unit.type_decls[0].methods[0].body.statements
    outer = chain.expr
    assert isinstance(outer, Call) and outer.name == "c" and len(outer.args) == 2
    assert isinstance(outer.receiver, Call) and outer.receiver.name == "b"
    assert isinstance(outer.receiver.receiver, Name) and outer.receiver.receiver.identifier == "a"
    assert bare.expr.receiver is None and bare.expr.name == "run"


def test_casts_generics_and_nested_blocks():
    unit = parse_source(
        "class A {\n"
        "  java.util.Map<String, java.util.List<Integer>> index;\n"
        "  int m(Object o) {\n"
        "    if (o != null) { while (n < 3) { n++; } } else return (int) o;\n"
        "    return ((A) o).m(null);\n"
        "  }\n"
        "}\n"
    )
    decl = unit.type_decls[0]
    assert decl.fields[0].type.name == "java.util.Map"
    assert [d.message for d in unit.diagnostics] == ["generic type arguments are not supported; ignored"]
    assert len(decl.methods[0].body.statements) == 2


@pytest.mark.parametrize(
    "body, message",
    [
        ("for (int i = 0; i < 3; i++) { x++; }", "'for' statements are not supported; skipped"),
        ("try { x++; } catch (Exception e) { } finally { }", "'try' statements are not supported; skipped"),
        ("switch (x) { case 1: break; }", "'switch' statements are not supported; skipped"),
        ("do { x++; } while (x < 3);", "'do' statements are not supported; skipped"),
    ],
)
def test_unsupported_statements_are_skipped(body, message):
    unit = parse_source("class A { int x; void m() { %s x = 1; } }" % body)
    method = unit.type_decls[0].methods[0]
    assert [d.message for d in unit.diagnostics] == [message]
    assert all(d.severity == "warning" for d in unit.diagnostics)
    assert len(method.body.statements) == 1
    assert not method.has_errors


def test_unsupported_declarations_warn():
    unit = parse_source(
        "import java.util.*;\n"
        "import static java.lang.Math.max;\n"
        "@Deprecated\n"
        "class A {\n"
        "  { x = 1; }\n"
        "  enum Color { RED }\n"
        "  int x;\n"
        "}\n"
        "enum Top { A, B }\n"
    )
    assert [d.message for d in unit.diagnostics] == [
        "wildcard import 'java.util.*' is not supported; ignored",
        "static import 'java.lang.Math.max' is not supported; ignored",
        "annotation '@Deprecated' is not supported; ignored",
        "initializer blocks are not supported; skipped",
        "nested type declarations are not supported; skipped",
        "enum and annotation declarations are not supported; skipped",
    ]
    assert unit.imports == ()
    assert [f.name for f in unit.type_decls[0].fields] == ["x"]


def test_lambda_marks_method_and_parsing_continues():
    unit = parse_source(
        "class A {\n"
        "  void bad() { Runnable r = () -> go(); }\n"
        "  void good() { go(); }\n"
        "}\n"
    )
    bad, good = unit.type_decls[0].methods
    assert bad.has_errors and bad.body.statements == ()
    assert not good.has_errors and len(good.body.statements) == 1
    (error,) = unit.diagnostics
    assert error.is_error
    assert error.message == "lambda expressions are not supported"
    assert (error.location.line, error.location.column) == (2, 29)


def test_one_malformed_method_among_three():
    unit = parse_unit(tokenize(
        "class A {\n"
        "  int x;\n"
        "  void first() { x = 1; }\n"
        "  void second() { Runnable r = () -> first(); }\n"
        "  void third() { first(); }\n"
        "}\n",
        "A.java",
    ))
    methods = unit.type_decls[0].methods
    assert [m.name for m in methods] == ["first", "second", "third"]
    assert [m.has_errors for m in methods] == [False, True, False]
    assert len(methods[2].body.statements) == 1
    assert [d.location.line for d in unit.diagnostics] == [4]


def test_recovers_after_broken_member():
    unit = parse_source("class A { int ; void ok() { } }\nclass B { }")
    assert [d.name for d in unit.type_decls] == ["A", "B"]
    assert [m.name for m in unit.type_decls[0].methods] == ["ok"]
    assert unit.has_errors


def test_garbage_yields_no_declarations():
    unit = parse_source("this is not a class", "junk.java")
    assert unit.type_decls == ()
    assert unit.has_errors
    assert unit.diagnostics[0].message.startswith("expected a class or interface declaration")


def test_unbalanced_braces():
    unit = parse_source("class A { void m() { }")
    assert any("is never closed" in d.message for d in unit.diagnostics)
    assert [t.name for t in unit.type_decls] == ["A"]
