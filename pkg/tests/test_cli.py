import io
import json

import pytest

from sylow2.cli import main


def run(*argv):
    buf = io.StringIO()
    status = main(list(argv), out=buf)
    return status, buf.getvalue()


def test_trees_zero():
    assert run("trees", "0") == (0, ".\n")


def test_trees_one_and_formats():
    assert run("trees", "1")[1] == "(. .)\n(.)\n"
    status, text = run("trees", "2", "--format", "json")
    assert status == 0 and len(json.loads(text)) == 5
    status, text = run("trees", "1", "--format", "csv")
    assert text.splitlines()[0] == "tree,dim,class_size"


def test_trees_cap(capsys):
    status, _ = run("trees", "5")
    assert status == 2
    assert "cap 4" in capsys.readouterr().err
    status, text = run("trees", "5", "--unsafe-cap")
    assert status == 0 and len(text.splitlines()) == 2 * 230 + 230 * 229 // 2


def test_forests():
    status, text = run("forests", "3")
    assert status == 0 and text == "[(. .), .]\n[(.), .]\n"
    assert run("forests", "0")[1] == "[]\n"


def test_classes():
    status, text = run("classes", "2")
    assert status == 0 and len(text.splitlines()) == 5
    status, text = run("classes", "3", "--oracle")
    assert status == 0 and len(text.splitlines()) == 20
    status, text = run("classes", "2", "--oracle", "--format", "json")
    assert sum(c["size"] for c in json.loads(text)) == 8


def test_table_csv():
    status, text = run("table", "hk", "2", "--format", "csv")
    lines = text.splitlines()
    assert status == 0 and len(lines) == 6
    assert all(len(line.split(",")) == 6 for line in lines[1:])


def test_table_pn_json():
    status, text = run("table", "pn", "5", "--format", "json")
    obj = json.loads(text)
    assert status == 0 and obj["group"] == "P_5" and obj["order"] == 8


def test_table_text_has_order_note():
    status, text = run("table", "hk", "1")
    assert status == 0 and text.startswith("# ")


def test_char_example():
    assert run("char", "--rep", "((. .) (.))", "--class", "((.) (.))") == (0, "-2\n")


def test_char_forest():
    status, text = run("char", "--rep", "[(.), .]", "--class", "[(.), .]")
    assert (status, text) == (0, "-1\n")


def test_char_non_canonical_note(capsys):
    status, text = run("char", "--rep", "((.) (. .))", "--class", "((.) (.))")
    assert (status, text) == (0, "-2\n")
    assert "note:" in capsys.readouterr().err


def test_char_bad_tree(capsys):
    status, _ = run("char", "--rep", "((. .)", "--class", ".")
    assert status == 2
    assert "error" in capsys.readouterr().err


def test_char_height_mismatch():
    assert run("char", "--rep", "(. .)", "--class", ".")[0] == 2


@pytest.mark.parametrize("cmd", ["diagram", "onedim", "macdonald"])
def test_graph_commands(cmd):
    status, text = run(cmd, "4")
    assert status == 0 and text.startswith("level")
    status, dot = run(cmd, "4", "--dot")
    assert status == 0 and dot.startswith("digraph")
    status, js = run(cmd, "4", "--json")
    assert status == 0 and "levels" in json.loads(js)


def test_onedim_recursive_same_json():
    assert run("onedim", "15", "--json") == run("onedim", "15", "--recursive", "--json")


def test_diagram_cap():
    assert run("diagram", "17")[0] == 2


def test_compare():
    status, text = run("compare", "8")
    assert status == 0 and "power-of-2" in text
    status, text = run("compare", "16", "--format", "json")
    obj = json.loads(text)
    assert [d[1] for d in obj["differences"]] == [4, 8]
    assert run("compare", "4")[0] == 2


def test_verify():
    status, text = run("verify", "--level", "3")
    assert status == 0
    assert "FAIL" not in text and "PASS" in text


def test_verify_json():
    status, text = run("verify", "--level", "2", "--max-n", "8", "--format", "json")
    assert status == 0 and all(r["passed"] for r in json.loads(text))


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["trees", "1", "--format", "xml"])
    assert e.value.code == 2
    assert run("trees", "-1")[0] == 2
