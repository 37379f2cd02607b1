#include "symsum/presets.hpp"

namespace symsum::presets {

namespace {

LatticePtr u_lattice(const std::string& name, const std::string& l0, const std::string& l1) {
    return IntersectionLattice::create(name, {{0, 1}, {1, 0}}, {l0, l1});
}

} // namespace

ManifoldModel t4_blowup(int n) {
    if (n < 0) throw std::invalid_argument("t4_blowup(n): n must be >= 0");
    int rank = 6 + n;
    std::vector<std::vector<i64>> gram(static_cast<size_t>(rank),
                                       std::vector<i64>(static_cast<size_t>(rank), 0));
    for (int b = 0; b < 3; ++b) {
        gram[static_cast<size_t>(2 * b)][static_cast<size_t>(2 * b + 1)] = 1;
        gram[static_cast<size_t>(2 * b + 1)][static_cast<size_t>(2 * b)] = 1;
    }
    for (int i = 0; i < n; ++i) gram[static_cast<size_t>(6 + i)][static_cast<size_t>(6 + i)] = -1;
    std::vector<std::string> labels = {"u1", "v1", "u2", "v2", "u3", "v3"};
    for (int i = 1; i <= n; ++i) labels.push_back("E" + std::to_string(i));
    std::string name = n == 0 ? "T4" : "T4#" + std::to_string(n);
    auto lat = IntersectionLattice::create(name, gram, labels);

    std::vector<i64> k(static_cast<size_t>(rank), 0);
    for (int i = 0; i < n; ++i) k[static_cast<size_t>(6 + i)] = 1;
    std::vector<i64> w(static_cast<size_t>(rank), -1);
    for (int i = 0; i < 6; ++i) w[static_cast<size_t>(i)] = 10;
    ModelFlags flags{n == 0, MinimalModelKind::neither, 3, n == 0};
    ManifoldModel m = ManifoldModel::general(name, lat, HomologyClass(lat, k), 4,
                                             HomologyClass(lat, w), flags);
    std::vector<HomologyClass> exc;
    for (int i = 0; i < n; ++i) exc.push_back(HomologyClass::basis(lat, 6 + i));
    m.known_exceptionals = std::move(exc);
    m.note = "aspherical minimal model: the exceptional divisors are the only (-1)-sphere classes";
    return m;
}

ManifoldModel elliptic_like(i64 fiber_mult, std::string name) {
    if (fiber_mult < 2 || fiber_mult % 2 != 0)
        throw std::invalid_argument("elliptic_like: fiber multiple must be even and >= 2");
    auto lat = u_lattice(name, "u", "v");
    ModelFlags flags{true, MinimalModelKind::neither, 1, false};
    ManifoldModel m = ManifoldModel::general(name, lat, HomologyClass(lat, {fiber_mult, 0}), 0,
                                             HomologyClass(lat, {1, 1}), flags);
    m.lattice_is_full_h2 = false;
    m.asserted_chern = Chern{0, 12};
    m.note = "working sublattice of H2 spanned by the fiber and a section";
    return m;
}

ManifoldModel m_g_like(std::string name) {
    auto lat = u_lattice(name, "T", "G");
    ModelFlags flags{true, MinimalModelKind::neither, 3, false};
    ManifoldModel m = ManifoldModel::general(std::move(name), lat, HomologyClass::zero(lat), 0,
                                             HomologyClass(lat, {1, 1}), flags);
    m.lattice_is_full_h2 = false;
    m.asserted_chern = Chern{0, 24};
    m.note = "spin, hence minimal; c2 = 24 is the least positive value compatible with "
             "spin signature divisibility";
    return m;
}

ManifoldModel q2_like() {
    auto lat = u_lattice("Q2", "Fhat", "G");
    ModelFlags flags{true, MinimalModelKind::neither, 3, true};
    ManifoldModel m = ManifoldModel::general("Q2", lat, HomologyClass(lat, {0, 2}), 4,
                                             HomologyClass(lat, {1, 1}), flags);
    m.lattice_is_full_h2 = false;
    m.asserted_chern = Chern{0, 0};
    m.note = "torus bundle over a genus-2 surface: chi = 0 by multiplicativity, "
             "signature 0 input, so (c1^2, c2) = (0, 0)";
    return m;
}

ManifoldModel t2_x_sigma2_like() {
    auto lat = u_lattice("T2xSigma2", "fhat", "shat");
    ModelFlags flags{true, MinimalModelKind::neither, 5, true};
    ManifoldModel m = ManifoldModel::general("T2xSigma2", lat, HomologyClass(lat, {2, 0}), 6,
                                             HomologyClass(lat, {1, 1}), flags);
    m.lattice_is_full_h2 = false;
    m.asserted_chern = Chern{0, 0};
    m.note = "product of the torus and a genus-2 surface; working sublattice fiber/section";
    return m;
}

} // namespace symsum::presets
