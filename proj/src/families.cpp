#include "grt/families.hpp"

#include <numeric>

namespace grt {

GroupRef cyclic_group(int n) {
    if (n <= 0) throw Error("cyclic group order must be positive");
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
    return std::make_shared<FiniteGroup>(std::move(flat), n);
}

GroupRef dihedral_group(int n) {
    if (n <= 0) throw Error("dihedral parameter must be positive");
    if (n == 1) return cyclic_group(2);
    if (n == 2) return direct_product(cyclic_group(2), cyclic_group(2));
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return from_permutations(n, {rot, refl});
}

GroupRef symmetric_group(int n) {
    if (n <= 1) return trivial_group();
    if (n == 2) return cyclic_group(2);
    std::vector<int> cycle(n), swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    swap[0] = 1;
    swap[1] = 0;
    return from_permutations(n, {cycle, swap});
}

GroupRef alternating_group(int n) {
    if (n <= 2) return trivial_group();
    if (n == 3) return cyclic_group(3);
    std::vector<int> three(n), big(n);
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    std::iota(big.begin(), big.end(), 0);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i) big[i] = 1 + (i % (n - 1));
    }
    return from_permutations(n, {three, big});
}

GroupRef quaternion_group() {
    // elements: 1,-1,i,-i,j,-j,k,-k; identity first
    auto idx = [](int sign, int axis) { return axis == 0 ? (sign > 0 ? 0 : 1) : 2 * axis + (sign > 0 ? 0 : 1); };
    auto sign_of = [](int e) { return (e == 0 || (e >= 2 && e % 2 == 0)) ? 1 : -1; };
    auto axis_of = [](int e) { return e < 2 ? 0 : e / 2; };
    // axis multiplication: 0=1, 1=i, 2=j, 3=k
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<int> flat(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int aa = axis_of(a), ab = axis_of(b);
            int s = sign_of(a) * sign_of(b) * sg[aa][ab];
            flat[a * 8 + b] = idx(s, ax[aa][ab]);
        }
    return std::make_shared<FiniteGroup>(std::move(flat), 8);
}

GroupRef heisenberg_group(int p) {
    // unitriangular 3x3 matrices over Z/p: (a,b,c) ~ [[1,a,c],[0,1,b],[0,0,1]]
    int n = p * p * p;
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            flat[idx(a, b, c) * n + idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    return std::make_shared<FiniteGroup>(std::move(flat), n);
}

std::vector<NamedGroup> nilpotent_catalog(int max_order) {
    std::vector<NamedGroup> out;
    auto add = [&](const std::string& name, const GroupRef& g) {
        if (g->order() <= max_order) out.push_back({name, g});
    };
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 16, 25, 27, 30}) add("C" + std::to_string(n), cyclic_group(n));
    add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    add("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
    add("C2xC2xC2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
    add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));
    add("C6xC2", direct_product(cyclic_group(6), cyclic_group(2)));
    add("Q8", quaternion_group());
    add("D4", dihedral_group(4));
    add("D8", dihedral_group(8));
    add("Heis2", heisenberg_group(2));
    add("Heis3", heisenberg_group(3));
    add("Q8xC3", direct_product(quaternion_group(), cyclic_group(3)));
    add("Q8xC2", direct_product(quaternion_group(), cyclic_group(2)));
    add("D4xC2", direct_product(dihedral_group(4), cyclic_group(2)));
    add("D4xC3", direct_product(dihedral_group(4), cyclic_group(3)));
    add("Heis3xC2", direct_product(heisenberg_group(3), cyclic_group(2)));
    add("C9xC7", direct_product(cyclic_group(9), cyclic_group(7)));
    add("C4xC25", direct_product(cyclic_group(4), cyclic_group(25)));
    add("Q8xC15", direct_product(quaternion_group(), cyclic_group(15)));
    add("Heis3xC5", direct_product(heisenberg_group(3), cyclic_group(5)));
    add("C16xC5", direct_product(cyclic_group(16), cyclic_group(5)));
    add("D4xC15", direct_product(dihedral_group(4), cyclic_group(15)));
    return out;
}

std::vector<NamedGroup> p_group_catalog(int p, int max_order) {
    std::vector<NamedGroup> out;
    auto add = [&](const std::string& name, const GroupRef& g) {
        if (g->order() <= max_order) out.push_back({name, g});
    };
    long pk = p;
    for (int k = 1; pk <= max_order; ++k, pk *= p) add("C" + std::to_string(pk), cyclic_group(static_cast<int>(pk)));
    add("C" + std::to_string(p) + "^2", direct_product(cyclic_group(p), cyclic_group(p)));
    add("C" + std::to_string(p) + "^3",
        direct_product(cyclic_group(p), direct_product(cyclic_group(p), cyclic_group(p))));
    add("C" + std::to_string(p * p) + "xC" + std::to_string(p),
        direct_product(cyclic_group(p * p), cyclic_group(p)));
    add("Heis" + std::to_string(p), heisenberg_group(p));
    if (p == 2) {
        add("Q8", quaternion_group());
        add("D4", dihedral_group(4));
        add("D8", dihedral_group(8));
        add("D16", dihedral_group(16));
        add("Q8xC2", direct_product(quaternion_group(), cyclic_group(2)));
        add("D4xC2", direct_product(dihedral_group(4), cyclic_group(2)));
        add("C4xC4", direct_product(cyclic_group(4), cyclic_group(4)));
        add("Q8xC4", direct_product(quaternion_group(), cyclic_group(4)));
        add("D4xC4", direct_product(dihedral_group(4), cyclic_group(4)));
        add("HeisxC2", direct_product(heisenberg_group(2), cyclic_group(2)));
    }
    if (p == 3) {
        add("C9xC3", direct_product(cyclic_group(9), cyclic_group(3)));
    }
    return out;
}

std::vector<NamedGroup> mixed_catalog(int max_order) {
    auto out = nilpotent_catalog(max_order);
    auto add = [&](const std::string& name, const GroupRef& g) {
        if (g->order() <= max_order) out.push_back({name, g});
    };
    add("S3", symmetric_group(3));
    add("S4", symmetric_group(4));
    add("A4", alternating_group(4));
    add("A5", alternating_group(5));
    add("D3", dihedral_group(3));
    add("D5", dihedral_group(5));
    add("D6", dihedral_group(6));
    return out;
}

} // namespace grt
