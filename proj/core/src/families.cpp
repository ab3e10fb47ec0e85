#include "regjump/families.hpp"

#include <algorithm>

namespace regjump {

namespace {

ContextPtr j_context() {
    static const ContextPtr ctx = make_context({"x1", "x2", "z1", "z2"});
    return ctx;
}

Monomial mono(const ContextPtr& ctx, std::vector<Exponent> exps) {
    return Monomial(ctx, std::move(exps));
}

std::vector<Monomial> mixed_jump_generators(const ContextPtr& ctx, int d) {
    Exponent e = static_cast<Exponent>(d);
    return {
        mono(ctx, {1, 0, e, 0}),     // x1 z1^d
        mono(ctx, {1, 0, 0, e}),     // x1 z2^d
        mono(ctx, {0, 1, e - 1, 1}), // x2 z1^(d-1) z2
    };
}

} // namespace

MonomialIdeal family_J(int d) {
    if (d < 2)
        throw validation_error("family_J requires d >= 2");
    ContextPtr ctx = j_context();
    std::vector<Monomial> gens = mixed_jump_generators(ctx, d);
    for (int i = 0; i <= d + 1; ++i)
        gens.push_back(mono(ctx, {0, 0, static_cast<Exponent>(d + 1 - i),
                                  static_cast<Exponent>(i)}));
    return MonomialIdeal::minimal_generators(gens);
}

std::pair<std::vector<Monomial>, MonomialIdeal> family_J_parts(int d) {
    if (d < 2)
        throw validation_error("family_J_parts requires d >= 2");
    ContextPtr ctx = j_context();
    std::vector<Monomial> z_gens;
    for (int i = 0; i <= d + 1; ++i)
        z_gens.push_back(mono(ctx, {0, 0, static_cast<Exponent>(d + 1 - i),
                                    static_cast<Exponent>(i)}));
    return {mixed_jump_generators(ctx, d), MonomialIdeal::minimal_generators(z_gens)};
}

OrderedGenerators family_J_block_order(int d, int a) {
    auto [x_gens, z_power] = family_J_parts(d);
    return block_order(x_gens, z_power, a);
}

MonomialIdeal family_H(int d) {
    if (d < 2)
        throw validation_error("family_H requires d >= 2");
    ContextPtr ctx = j_context();
    std::vector<Monomial> gens = mixed_jump_generators(ctx, d);
    // z1 z2 (z1, z2)^(d-1)
    for (int i = 0; i < d; ++i)
        gens.push_back(mono(ctx, {0, 0, static_cast<Exponent>(d - i),
                                  static_cast<Exponent>(1 + i)}));
    return MonomialIdeal::minimal_generators(gens);
}

MonomialIdeal family_Sq(int d) {
    if (d < 2)
        throw validation_error("family_Sq requires d >= 2");
    std::vector<std::string> names = {"x1", "x2"};
    for (int i = 1; i <= 2 * d; ++i)
        names.push_back("z" + std::to_string(i));
    ContextPtr ctx = make_context(std::move(names));
    std::size_t nz = static_cast<std::size_t>(2 * d);
    auto zvar = [&](std::size_t one_based) { return 2 + (one_based - 1); };
    std::vector<Monomial> gens;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
        std::vector<Exponent> exps(ctx->size(), 0);
        exps[0] = 1;
        exps[zvar(2 * i - 1)] = 1;
        exps[zvar(2 * i)] = 1;
        gens.push_back(mono(ctx, std::move(exps)));
    }
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
        std::vector<Exponent> exps(ctx->size(), 0);
        exps[1] = 1;
        exps[zvar(2 * i)] = 1;
        exps[zvar(2 * i + 1 <= nz ? 2 * i + 1 : 1)] = 1;
        gens.push_back(mono(ctx, std::move(exps)));
    }
    for (std::size_t i = 1; i <= nz; ++i)
        for (std::size_t j = i + 1; j <= nz; ++j)
            for (std::size_t l = j + 1; l <= nz; ++l) {
                std::vector<Exponent> exps(ctx->size(), 0);
                exps[zvar(i)] = 1;
                exps[zvar(j)] = 1;
                exps[zvar(l)] = 1;
                gens.push_back(mono(ctx, std::move(exps)));
            }
    return MonomialIdeal::minimal_generators(gens);
}

MultijumpConstruction family_multijump_detailed(int a, int b) {
    if (!(1 < a && a < b))
        throw validation_error("family_multijump requires 1 < a < b");
    ContextPtr ctx = make_context({"x", "y1", "y2", "z1", "z2"});
    Exponent ea = static_cast<Exponent>(a), eb = static_cast<Exponent>(b);
    std::vector<Monomial> gens = {
        mono(ctx, {0, 0, 1, eb, 0}),          // y2 z1^b
        mono(ctx, {0, 0, 1, 0, eb}),          // y2 z2^b
        mono(ctx, {1, 0, 0, eb - 1, 1}),      // x z1^(b-1) z2
        mono(ctx, {0, 1, 0, eb, 0}),          // z1^(b-a) * y1 z1^a
        mono(ctx, {0, 1, 0, eb - ea, ea}),    // z1^(b-a) * y1 z2^a
        mono(ctx, {1, 0, 0, eb - 1, 1}),      // z1^(b-a) * x z1^(a-1) z2 (collision)
    };
    for (int i = 0; i < b; ++i)
        gens.push_back(mono(ctx, {0, 0, 0, static_cast<Exponent>(b - i),
                                  static_cast<Exponent>(1 + i)}));
    MultijumpConstruction out{MonomialIdeal::minimal_generators(gens), false};
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), LexDescending{});
    out.duplicate_mixed_generator =
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    return out;
}

MonomialIdeal family_multijump(int a, int b) {
    return family_multijump_detailed(a, b).ideal;
}

namespace {

ContextPtr abcdef_context() {
    static const ContextPtr ctx = make_context({"a", "b", "c", "d", "e", "f"});
    return ctx;
}

std::vector<Monomial> terai_listed_generators() {
    ContextPtr ctx = abcdef_context();
    return {
        mono(ctx, {1, 1, 1, 0, 0, 0}), // abc
        mono(ctx, {1, 1, 0, 1, 0, 0}), // abd
        mono(ctx, {1, 0, 1, 0, 1, 0}), // ace
        mono(ctx, {1, 0, 0, 1, 0, 1}), // adf
        mono(ctx, {1, 0, 0, 0, 1, 1}), // aef
        mono(ctx, {0, 1, 1, 0, 0, 1}), // bcf
        mono(ctx, {0, 1, 0, 1, 1, 0}), // bde
        mono(ctx, {0, 1, 0, 0, 1, 1}), // bef
        mono(ctx, {0, 0, 1, 1, 1, 0}), // cde
        mono(ctx, {0, 0, 1, 1, 0, 1}), // cdf
    };
}

std::vector<Monomial> conca_herzog_listed_generators() {
    ContextPtr ctx = make_context({"a", "b", "c", "d"});
    return {
        mono(ctx, {2, 1, 0, 0}), // a^2 b
        mono(ctx, {2, 0, 1, 0}), // a^2 c
        mono(ctx, {1, 0, 2, 0}), // a c^2
        mono(ctx, {0, 1, 2, 0}), // b c^2
        mono(ctx, {1, 0, 1, 1}), // a c d
    };
}

std::vector<Monomial> sturmfels_listed_generators() {
    ContextPtr ctx = abcdef_context();
    return {
        mono(ctx, {0, 0, 0, 1, 1, 1}), // def
        mono(ctx, {0, 0, 1, 0, 1, 1}), // cef
        mono(ctx, {0, 0, 1, 1, 0, 1}), // cdf
        mono(ctx, {0, 0, 1, 1, 1, 0}), // cde
        mono(ctx, {0, 1, 0, 0, 1, 1}), // bef
        mono(ctx, {0, 1, 1, 1, 0, 0}), // bcd
        mono(ctx, {1, 0, 1, 0, 0, 1}), // acf
        mono(ctx, {1, 0, 0, 1, 1, 0}), // ade
    };
}

} // namespace

MonomialIdeal example_terai() {
    return MonomialIdeal::minimal_generators(terai_listed_generators());
}

MonomialIdeal example_conca_herzog() {
    return MonomialIdeal::minimal_generators(conca_herzog_listed_generators());
}

MonomialIdeal example_sturmfels() {
    return MonomialIdeal::minimal_generators(sturmfels_listed_generators());
}

OrderedGenerators example_terai_listed() {
    return make_ordered_generators(example_terai(), terai_listed_generators());
}

OrderedGenerators example_conca_herzog_listed() {
    return make_ordered_generators(example_conca_herzog(), conca_herzog_listed_generators());
}

OrderedGenerators example_sturmfels_listed() {
    return make_ordered_generators(example_sturmfels(), sturmfels_listed_generators());
}

} // namespace regjump
