#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "supercong/cli.hpp"
#include "supercong/congruences.hpp"
#include "supercong/cyclotomic.hpp"
#include "supercong/errors.hpp"
#include "supercong/harmonic.hpp"
#include "supercong/identities.hpp"
#include "supercong/padic.hpp"

namespace py = pybind11;
using namespace supercong;

namespace {

py::dict row_dict(const CheckReport& r) {
  py::dict d;
  d["family"] = r.family;
  d["p"] = r.p ? py::cast(*r.p) : py::none();
  d["n"] = r.n ? py::cast(*r.n) : py::none();
  d["lambda"] = r.lambda ? py::cast(*r.lambda) : py::none();
  d["modulus"] = r.modulus;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["status"] = to_string(r.status);
  d["note"] = r.note;
  d["informational"] = r.informational;
  return d;
}

py::tuple rational(const BigRational& q) {
  return py::make_tuple(to_decimal(BigInt(q.get_num())), to_decimal(BigInt(q.get_den())));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact supercongruence and harmonic-sum checks";
  m.attr("__version__") = SUPERCONG_VERSION;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_ValueError);

  m.def("harmonic", [](std::uint64_t n, unsigned order) { return rational(harmonic(n, order)); },
        py::arg("n"), py::arg("order") = 1);
  m.def("gamma_p", [](std::int64_t x, std::uint64_t p, unsigned k) {
    const RingDesc ring(p, k);
    return GammaTable::build(ring)->operator()(PadicPoint::from_integer(x, ring)).value();
  }, py::arg("x"), py::arg("p"), py::arg("k"));
  m.def("oracle_value", [](unsigned n, std::uint64_t lam, std::uint64_t p) {
    return to_decimal(hypergeometric_int(n, lam, p));
  }, py::arg("n"), py::arg("lam"), py::arg("p"));
  m.def("corollary_lhs", [](std::uint64_t p, unsigned k) { return corollary_lhs(p, k).value(); },
        py::arg("p"), py::arg("k"));
  m.def("corollary_check", [](std::uint64_t p, unsigned k) { return row_dict(corollary_check(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("theorem_check", [](std::uint64_t p, unsigned n, std::uint64_t lam) {
    return row_dict(theorem_check({p, n, lam}));
  }, py::arg("p"), py::arg("n"), py::arg("lam"));
  m.def("identity_names", [] {
    std::vector<std::string> out;
    for (IdentityId id : all_identities()) out.push_back(to_string(id));
    return out;
  });
  m.def("eval_identity", [](const std::string& name, unsigned n) {
    const IdentitySides s = eval_identity(identity_from_string(name), n);
    return py::make_tuple(rational(s.lhs), rational(s.rhs));
  }, py::arg("name"), py::arg("n"));
  m.def("verify_identity", [](const std::string& name, unsigned n_max) {
    const IdentityId id = identity_from_string(name);
    CheckReport r;
    {
      py::gil_scoped_release release;
      r = verify_identity(id, n_max);
    }
    return row_dict(r);
  }, py::arg("name"), py::arg("n_max"));
  m.def("cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"supercong"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
