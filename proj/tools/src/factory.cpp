#include "factory.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/models/fermion.hpp"
#include "cdlab/models/matrix.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/models/simple.hpp"
#include "cdlab/models/spin.hpp"

namespace cdlab::cli {

namespace md = cdlab::models;

namespace {

Vec gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = g(rng);
  return x;
}

SimModel from_cd(const cdcore::CdSystem& sys, std::vector<std::string> cols, std::vector<analysis::LoopSpec> loops,
                 std::function<Vec(std::mt19937_64&)> sample) {
  SimModel m;
  m.name = sys.name;
  m.problem = cdcore::make_problem(sys);
  m.state_columns = std::move(cols);
  m.hamiltonian = sys.hamiltonian;
  m.angle_coords = sys.angle_coords;
  m.loops = std::move(loops);
  m.sample = std::move(sample);
  return m;
}

std::vector<std::string> complex_columns(const std::string& base, int n, bool indexed = true, int first = 1) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) {
    const std::string suffix = indexed ? std::to_string(first + k) : "";
    out.push_back("re_" + base + suffix);
    out.push_back("im_" + base + suffix);
  }
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

cdcore::OdeProblem complex_problem(std::function<CVec(const CVec&)> eom, std::function<double(const CVec&)> guard,
                                   double floor) {
  cdcore::OdeProblem p;
  p.rhs = [eom](const Vec& x, double, Vec& dx) { dx = pack(eom(unpack(x))); };
  p.guard = [guard](const Vec& x) { return guard(unpack(x)); };
  p.guard_floor = floor;
  return p;
}

CMat hermitian_from(const Section& params, const std::string& dim_key, long dim_default, std::uint64_t model_seed) {
  if (params.has("eigenvalues")) {
    const auto ev = params.numbers("eigenvalues");
    if (ev.size() < 2) config_error(params.key_path("eigenvalues"), "need at least two eigenvalues");
    if (params.has(dim_key) && params.integer(dim_key) != static_cast<long>(ev.size()))
      config_error(params.key_path(dim_key), "disagrees with the number of eigenvalues");
    CMat A = CMat::Zero(static_cast<Eigen::Index>(ev.size()), static_cast<Eigen::Index>(ev.size()));
    for (std::size_t i = 0; i < ev.size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = ev[i];
    return A;
  }
  const long N = params.integer(dim_key, dim_default);
  if (N < 2 || N > 64) config_error(params.key_path(dim_key), "must be in [2, 64]");
  std::mt19937_64 rng(model_seed);
  return md::random_hermitian(static_cast<int>(N), rng);
}

}  // namespace

std::vector<std::string> simulate_model_names() {
  return {"euler",     "pq",        "toy_oscillator", "raindrop", "monopole",      "torus", "circle",
          "forced",    "nonautonomous", "constants", "kahler_log", "matrix", "cs_oscillator", "spin",
          "fermion"};
}

SimModel build_model(const std::string& name, const Section& P, double kappa, std::uint64_t model_seed) {
  using LS = analysis::LoopSpec;
  const LS IPhi{LS::Kind::canonical, 0, 1};
  auto gauss = [](int n) { return [n](std::mt19937_64& g) { return gaussian(n, g); }; };
  SimModel m;
  if (name == "euler") {
    m = from_cd(md::euler_system(kappa), {"p", "q"}, {}, gauss(2));
  } else if (name == "pq") {
    m = from_cd(md::pq_system(kappa), {"p", "q"}, {}, gauss(2));
  } else if (name == "toy_oscillator") {
    md::ToyParams tp{kappa, P.number("omega0", 1.0), P.positive("hbar", 1.0)};
    m = from_cd(md::toy_oscillator(tp), {"I", "phi"}, {IPhi}, gauss(2));
  } else if (name == "raindrop") {
    m = from_cd(md::raindrop(kappa), {"p", "q"}, {}, gauss(2));
  } else if (name == "monopole") {
    md::MonopoleParams mp{kappa, P.positive("m", 1.0), P.number("h", 1.0)};
    m = from_cd(md::monopole(mp), {"p_r", "r"}, {}, [](std::mt19937_64& g) {
      Vec x = gaussian(2, g);
      x[1] = 0.5 + std::abs(x[1]);
      return x;
    });
  } else if (name == "torus") {
    m = from_cd(md::torus_system(md::torus_quadratic(kappa, P.number("h", 1.0))), {"I", "phi"}, {IPhi}, gauss(2));
  } else if (name == "circle") {
    md::CircleParams cp{kappa, P.positive("m", 1.0), P.number("h", 1.0), P.positive("L", 2.0 * std::numbers::pi)};
    m = from_cd(md::circle_particle(cp), {"p", "q"}, {IPhi}, gauss(2));
  } else if (name == "forced") {
    md::ForcedParams fp{kappa, P.positive("m", 1.0), P.positive("k", 1.0), P.number("omega", 1.0), P.number("f", 1.0)};
    m = from_cd(md::forced_oscillator(fp), {"p", "q", "I", "phi"}, {{LS::Kind::canonical, 0, 1}}, gauss(4));
  } else if (name == "nonautonomous") {
    md::NonautoParams np{kappa,           P.number("omega0", 1.0),   P.number("h0", 1.0),
                         P.number("h1", 2.0), P.number("t_center", 0.0), P.positive("width", 1.0)};
    m = from_cd(md::nonautonomous_oscillator(np), {"I", "phi"}, {IPhi}, gauss(2));
  } else if (name == "constants") {
    md::ConstantsParams cp{kappa, P.number("omega0", 1.0), P.number("h", 1.0)};
    m = from_cd(md::constants_example(cp), {"I1", "phi1", "I2", "phi2"}, {IPhi, {LS::Kind::canonical, 2, 3}},
                gauss(4));
  } else if (name == "kahler_log") {
    const cplx c(P.number("c_re", -1.0), P.number("c_im", 0.0));
    const cdcore::KahlerSystem ks = md::kahler_log(0.5 * kappa, c);
    m.name = name;
    m.problem = cdcore::make_problem(ks);
    m.state_columns = complex_columns("z", 1, false);
    m.hamiltonian = [H = ks.H](const Vec& x) { return H(unpack(x)); };
    m.loops = {{LS::Kind::complex_polar, 0, 1}};
    m.sample = gauss(2);
  } else if (name == "matrix") {
    const md::MatrixModel mm = md::matrix_model(hermitian_from(P, "N", 3, model_seed), kappa);
    m.name = name;
    m.problem = complex_problem([mm](const CVec& s) { return md::matrix_eom(mm, s); },
                                [](const CVec& s) { return std::abs(md::matrix_pairing(s)); }, mm.floor);
    m.state_columns = concat(complex_columns("psi", mm.N), complex_columns("chi", mm.N));
    m.quasi_integrals = {{"Q1", [](const Vec& x) { return md::matrix_q1(unpack(x)); }},
                         {"Q2", [](const Vec& x) { return md::matrix_q2(unpack(x)); }}};
    m.hamiltonian = [mm](const Vec& x) { return md::matrix_energy(mm, unpack(x)); };
    m.sample = [n = 2 * mm.N](std::mt19937_64& g) { return pack(md::random_complex(n, g)); };
  } else if (name == "cs_oscillator") {
    md::OscParams op;
    op.omega0 = P.number("omega0", 1.0);
    op.epsilon = 0.5 * kappa;
    const long N = P.integer("Nmax", 16);
    if (N < 1 || N > 512) config_error(P.key_path("Nmax"), "must be in [1, 512]");
    op.Nmax = static_cast<int>(N);
    op.check_tail = P.boolean("check_tail", true);
    m.name = name;
    m.problem = complex_problem([op](const CVec& s) { return md::cs_eom(s, op); },
                                [](const CVec& s) { return std::abs(md::osc_wavefunction(s).first); }, op.floor);
    m.state_columns = concat(complex_columns("z", 1, false), complex_columns("F", op.Nmax + 1, true, 0));
    m.quasi_integrals = {{"Q1", [](const Vec& x) { return md::osc_q1(unpack(x)); }}};
    m.hamiltonian = [w = op.omega0](const Vec& x) { return w * (x[0] * x[0] + x[1] * x[1]); };
    m.loops = {{LS::Kind::complex_polar, 0, 1}};
    m.sample = [n = op.Nmax + 2](std::mt19937_64& g) {
      CVec z = md::random_complex(n, g);
      z[0] *= 0.5;
      for (int k = 1; k < n; ++k) z[k] /= std::sqrt(static_cast<double>(k));
      return pack(z);
    };
  } else if (name == "spin") {
    md::SpinParams sp;
    const long mm = P.integer("m", 1);
    if (mm < 1 || mm > 64) config_error(P.key_path("m"), "must be in [1, 64]");
    sp.m = static_cast<int>(mm);
    sp.lambda = P.number("lambda", 1.0);
    sp.epsilon = 0.5 * kappa;
    const md::SpinForm form = P.choice("form", {"kahler", "printed"}, "kahler") == "printed" ? md::SpinForm::printed
                                                                                             : md::SpinForm::kahler;
    m.name = name;
    m.problem = complex_problem([sp, form](const CVec& s) { return md::spin_eom(s, sp, form); },
                                [m_ = sp.m](const CVec& s) { return std::abs(md::spin_wavefunction(s, m_).first); },
                                sp.floor);
    m.state_columns = concat(complex_columns("s", 2), complex_columns("F", sp.m + 1, true, 0));
    m.quasi_integrals = {{"Q1", [m_ = sp.m](const Vec& x) { return md::spin_q1(unpack(x), m_); }},
                         {"Q2", [m_ = sp.m](const Vec& x) { return md::spin_q2(unpack(x), m_); }}};
    m.hamiltonian = [sp](const Vec& x) {
      const CVec s = unpack(x);
      return md::spin_hamiltonian(Eigen::Vector2cd(s[0], s[1]), sp.m, sp.lambda);
    };
    m.sample = [n = sp.m + 3](std::mt19937_64& g) { return pack(md::random_complex(n, g)); };
  } else if (name == "fermion") {
    const CMat A = hermitian_from(P, "N", 4, model_seed);
    const long k = P.integer("k", 2);
    if (k < 1 || k >= A.rows()) config_error(P.key_path("k"), "must satisfy 1 <= k < N");
    const md::FermionModel fm = md::fermion_model(A, static_cast<int>(k), kappa);
    m.name = name;
    m.problem = complex_problem(
        [fm](const CVec& s) { return md::fermion_eom(fm, s); },
        [fm](const CVec& s) { return std::abs((md::fermion_chi(fm, s) * md::fermion_psi(fm, s)).determinant()); },
        fm.floor);
    std::vector<std::string> cols;
    for (int j = 0; j < fm.k; ++j)
      for (int i = 0; i < fm.N; ++i) cols = concat(cols, complex_columns("psi" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 1, false));
    for (int j = 0; j < fm.N; ++j)
      for (int i = 0; i < fm.k; ++i) cols = concat(cols, complex_columns("chi" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 1, false));
    m.state_columns = cols;
    m.quasi_integrals = {{"Q1", [fm](const Vec& x) { return md::fermion_q1(fm, unpack(x)).norm(); }},
                         {"Q2", [fm](const Vec& x) { return md::fermion_q2(fm, unpack(x)).norm(); }}};
    m.hamiltonian = [fm](const Vec& x) { return md::fermion_energy(fm, unpack(x)); };
    m.sample = [n = 2 * fm.N * fm.k](std::mt19937_64& g) { return pack(md::random_complex(n, g)); };
  } else {
    std::string list;
    for (const auto& n : simulate_model_names()) list += (list.empty() ? "" : ", ") + n;
    config_error("/model", "unknown model '" + name + "' (known: " + list + ")");
  }
  P.finish();
  m.name = name;
  return m;
}

}  // namespace cdlab::cli
