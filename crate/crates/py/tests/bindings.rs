use pyo3::ffi::c_str;
use pyo3::prelude::*;

#[test]
fn module_runs_from_python() {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "klcat").unwrap();
        klcat_py::klcat_py(&m).unwrap();
        py.import("sys").unwrap().getattr("modules").unwrap().set_item("klcat", m).unwrap();
        py.run(
            c_str!(
                r#"
import klcat
g = klcat.WeylGroup("A3")
assert g.order == 24
assert g.kl_polynomial([2], [2, 1, 3, 2]) == [1, 1]
assert g.longest() == [1, 2, 1, 3, 2, 1]
t = g.kl_table()
assert len(t) == 24
assert t.p(0, 23) == [1]
assert t.characters_matrix(inverse=True)[0][1] == 1
assert all(p["passed"] for r in t.verify(["thm4", "oracle"]) for p in r["properties"])
a = klcat.Algebra.sl2()
assert a.dimension == 5 and a.vertices == ["e", "s"]
assert a.ext_simple(1, 1) == [1, 0, 1]
assert a.check_conjectures([1, 2])["applicable"]
try:
    klcat.WeylGroup("Q2")
    raise AssertionError("expected ValueError")
except ValueError:
    pass
"#
            ),
            None,
            None,
        )
        .unwrap_or_else(|e| panic!("{e}"));
    });
}
