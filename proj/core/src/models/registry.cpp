#include "cdlab/models/registry.hpp"

#include "cdlab/cdcore/field.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/models/fermion.hpp"
#include "cdlab/models/matrix.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/simple.hpp"
#include "cdlab/models/spin.hpp"

namespace cdlab::models {

CMat random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = cplx(g(rng), g(rng));
  return 0.5 * (M + M.adjoint());
}

CVec random_complex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVec z(n);
  for (int i = 0; i < n; ++i) z[i] = cplx(g(rng), g(rng));
  return z;
}

namespace {

Vec gaussian(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = scale * g(rng);
  return x;
}

// Redraw until the guard is at least kSampleGuard, keeping finite differences off the singular set.
constexpr double kSampleGuard = 1e-2;

std::function<Vec(std::mt19937_64&)> guarded(const cdcore::CdSystem& sys, std::function<Vec(std::mt19937_64&)> draw) {
  return [sys, draw](std::mt19937_64& rng) {
    for (int k = 0; k < 1000; ++k) {
      Vec x = draw(rng);
      if (!sys.guard || sys.guard(x) > std::max(kSampleGuard, 10.0 * sys.guard_floor)) return x;
    }
    throw Error(Errc::SingularPoint, "could not draw a nonsingular point for " + sys.name);
  };
}

RegisteredSystem kahler_entry(const cdcore::KahlerSystem& ks,
                              std::vector<std::pair<std::string, std::function<double(const CVec&)>>> q,
                              std::function<CVec(std::mt19937_64&)> draw) {
  RegisteredSystem r;
  r.sys = cdcore::kahler_as_cd(ks);
  for (auto& [name, f] : q) r.sys.quasi_integrals.push_back({name, [f](const Vec& x) { return f(unpack(x)); }});
  r.sample = guarded(r.sys, [draw](std::mt19937_64& rng) { return pack(draw(rng)); });
  return r;
}

}  // namespace

std::vector<std::string> registered_names() {
  return {"euler",       "pq",         "toy_oscillator", "raindrop", "monopole", "torus",
          "circle",      "forced",     "constants",      "kahler_log", "matrix", "cs_oscillator",
          "spin",        "fermion"};
}

RegisteredSystem registered_system(const std::string& name, double kappa, std::uint64_t model_seed) {
  std::mt19937_64 mrng(model_seed);
  RegisteredSystem r;
  auto plain = [&r](cdcore::CdSystem s, std::function<Vec(std::mt19937_64&)> draw) {
    r.sys = std::move(s);
    r.sample = guarded(r.sys, std::move(draw));
    return r;
  };
  if (name == "euler") return plain(euler_system(kappa), [](auto& g) { return gaussian(2, g); });
  if (name == "pq") return plain(pq_system(kappa), [](auto& g) { return gaussian(2, g); });
  if (name == "toy_oscillator")
    return plain(toy_oscillator({kappa, 1.0, 1.0}), [](auto& g) { return gaussian(2, g); });
  if (name == "raindrop") return plain(raindrop(kappa), [](auto& g) { return gaussian(2, g); });
  if (name == "monopole")
    return plain(monopole({kappa, 1.0, 1.0}), [](auto& g) {
      Vec x = gaussian(2, g);
      x[1] = 0.5 + std::abs(x[1]);
      return x;
    });
  if (name == "torus") return plain(torus_system(torus_quadratic(kappa, 1.0)), [](auto& g) { return gaussian(2, g); });
  if (name == "circle")
    return plain(circle_particle({kappa, 1.0, 1.0, 6.283185307179586}), [](auto& g) { return gaussian(2, g); });
  if (name == "forced")
    return plain(forced_oscillator({kappa, 1.0, 1.0, 1.3, 0.5}), [](auto& g) { return gaussian(4, g); });
  if (name == "constants") return plain(constants_example({kappa, 1.0, 1.0}), [](auto& g) { return gaussian(4, g); });
  if (name == "kahler_log")
    return kahler_entry(kahler_log(0.5 * kappa, cplx(-1.0, 0.3)), {}, [](auto& g) { return random_complex(1, g); });
  if (name == "matrix") {
    const MatrixModel m = matrix_model(random_hermitian(3, mrng), kappa);
    return kahler_entry(matrix_kahler(m),
                        {{"Q1", matrix_q1}, {"Q2", matrix_q2}},
                        [](auto& g) { return random_complex(6, g); });
  }
  if (name == "cs_oscillator") {
    OscParams p;
    p.omega0 = 1.0;
    p.epsilon = 0.5 * kappa;
    p.Nmax = 8;
    p.check_tail = false;
    return kahler_entry(osc_kahler(p), {{"Q1", osc_q1}}, [](auto& g) {
      CVec z = random_complex(10, g);
      z[0] *= 0.5;
      return z;
    });
  }
  if (name == "spin") {
    SpinParams p;
    p.m = 2;
    p.lambda = 1.0;
    p.epsilon = 0.5 * kappa;
    return kahler_entry(spin_kahler(p),
                        {{"Q1", [](const CVec& s) { return spin_q1(s, 2); }},
                         {"Q2", [](const CVec& s) { return spin_q2(s, 2); }}},
                        [](auto& g) { return random_complex(5, g); });
  }
  if (name == "fermion") {
    const FermionModel m = fermion_model(random_hermitian(3, mrng), 2, kappa);
    return kahler_entry(fermion_kahler(m),
                        {{"Q1", [m](const CVec& s) { return fermion_q1(m, s).norm(); }},
                         {"Q2", [m](const CVec& s) { return fermion_q2(m, s).norm(); }}},
                        [](auto& g) { return random_complex(12, g); });
  }
  throw Error(Errc::InvalidArgument, "unknown system '" + name + "'");
}

std::vector<RegisteredSystem> registered_systems(double kappa, std::uint64_t model_seed) {
  std::vector<RegisteredSystem> out;
  for (const auto& n : registered_names()) out.push_back(registered_system(n, kappa, model_seed));
  return out;
}

}  // namespace cdlab::models
