#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattice_pick/certificate.hpp"
#include "lattice_pick/decompose.hpp"
#include "lattice_pick/generator.hpp"
#include "lattice_pick/lattice_count.hpp"
#include "lattice_pick/polygon.hpp"
#include "lattice_pick/svg.hpp"

namespace py = pybind11;
using namespace lattice_pick;

// Python ints are arbitrary precision, so they go through their decimal form.
namespace pybind11::detail {

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<LatticePoint> {
  PYBIND11_TYPE_CASTER(LatticePoint, const_name("tuple[int, int]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 2) return false;
    make_caster<Integer> x, y;
    if (!x.load(seq[0], convert) || !y.load(seq[1], convert)) return false;
    value = LatticePoint(cast_op<Integer>(x), cast_op<Integer>(y));
    return true;
  }

  static handle cast(const LatticePoint& p, return_value_policy policy, handle parent) {
    py::object x = reinterpret_steal<py::object>(make_caster<Integer>::cast(p.x, policy, parent));
    py::object y = reinterpret_steal<py::object>(make_caster<Integer>::cast(p.y, policy, parent));
    return py::make_tuple(x, y).release();
  }
};

}  // namespace pybind11::detail

namespace {

py::dict counts_dict(const PickCounts& c) {
  py::dict d;
  d["interior"] = c.interior;
  d["boundary"] = c.boundary;
  d["area2"] = c.area2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice-polygon kernel: Pick counts, decompositions and certificates.";

  py::register_exception<PolygonError>(m, "PolygonError", PyExc_ValueError);
  py::register_exception<DecomposeError>(m, "DecomposeError", PyExc_RuntimeError);
  py::register_exception<MalformedCertificate>(m, "MalformedCertificate", PyExc_ValueError);
  py::register_exception<GenerationExhausted>(m, "GenerationExhausted", PyExc_RuntimeError);
  py::register_exception<HullError>(m, "HullError", PyExc_ValueError);

  py::class_<Polygon>(m, "Polygon")
      .def(py::init(&validate_polygon), py::arg("vertices"),
           "Validate a vertex list; raises PolygonError if it is not a simple polygon.")
      .def_property_readonly("vertices", &Polygon::vertices)
      .def_property_readonly("orientation",
                             [](const Polygon& p) { return std::string(to_string(p.orientation())); })
      .def("__len__", &Polygon::size)
      .def("__repr__", [](const Polygon& p) {
        return "Polygon(" + std::to_string(p.size()) + " vertices)";
      });

  m.def("is_simple", [](const VertexList& vts) { return is_simple(vts); }, py::arg("vertices"));
  m.def("rotate_vertices", [](const VertexList& vts, std::size_t k) { return rotate_vertices(vts, k); },
        py::arg("vertices"), py::arg("k"));
  m.def("convex_hull", [](const VertexList& pts) { return convex_hull(pts); }, py::arg("points"));
  m.def("is_convex", &is_convex, py::arg("polygon"));
  m.def("extreme_point_count", &extreme_point_count, py::arg("polygon"));
  m.def(
      "classify_point",
      [](const LatticePoint& p, const Polygon& poly) { return std::string(to_string(classify_point(p, poly))); },
      py::arg("point"), py::arg("polygon"));

  m.def("boundary_count", &boundary_count, py::arg("polygon"));
  m.def("interior_count", &interior_count, py::arg("polygon"));
  m.def("area2", &area2, py::arg("polygon"));
  m.def("pick_area2", &pick_area2, py::arg("interior"), py::arg("boundary"));
  m.def(
      "verify_pick",
      [](const Polygon& poly, bool scanline) {
        PickReport r = verify_pick(poly, scanline ? CountMethod::Scanline : CountMethod::BruteForce);
        py::dict d = counts_dict(r.counts);
        d["pick_area2"] = r.pick_area2;
        d["residual"] = r.residual;
        return d;
      },
      py::arg("polygon"), py::arg("scanline") = false);

  m.def("is_elementary", &is_elementary, py::arg("triangle"));
  m.def(
      "find_pocket",
      [](const Polygon& poly) {
        PocketDecomposition pd = find_pocket(poly);
        py::dict d;
        d["rotation"] = pd.rotation;
        d["pocket_path"] = pd.pocket_path;
        d["pocket"] = pd.pocket.vertices();
        d["filled"] = pd.filled.vertices();
        return d;
      },
      py::arg("polygon"));
  m.def(
      "decompose",
      [](const Polygon& poly) { return serialize(make_certificate(poly, decompose(poly))); },
      py::arg("polygon"), "Decompose and return the certificate as canonical JSON.");
  m.def(
      "check_certificate",
      [](const std::string& text) {
        CheckReport r = check_certificate(deserialize(text));
        py::dict d;
        d["valid"] = r.valid;
        py::list violations;
        for (const auto& v : r.violations) violations.append(py::make_tuple(v.tree_path, v.rule, v.message));
        d["violations"] = violations;
        d["root_counts"] = r.root_counts ? py::object(counts_dict(*r.root_counts)) : py::none();
        d["residual"] = r.residual ? py::cast(*r.residual) : py::none();
        return d;
      },
      py::arg("certificate"));

  m.def(
      "generate_polygon",
      [](std::size_t n, std::uint64_t bound, std::uint64_t seed, std::size_t max_retries) {
        return generate_polygon({n, bound, seed, max_retries});
      },
      py::arg("vertex_count"), py::arg("coord_bound"), py::arg("seed"), py::arg("max_retries") = 1000);

  m.def(
      "render_svg",
      [](const Polygon& poly, bool hull, bool pockets, bool decomposition, bool lattice) {
        return render_svg(poly, {hull, pockets, decomposition, lattice});
      },
      py::arg("polygon"), py::arg("show_hull") = false, py::arg("show_pockets") = false,
      py::arg("show_decomposition") = false, py::arg("show_lattice") = false);

  m.attr("__version__") = "0.1.0";
}
