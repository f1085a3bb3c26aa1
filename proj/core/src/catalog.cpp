#include "prodquot/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prodquot/errors.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/presentation.hpp"
#include "prodquot/todd_coxeter.hpp"

namespace prodquot {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Strips a trailing comment and surrounding whitespace.
std::string strip_line(const std::string& raw) {
    std::size_t hash = raw.find('#');
    return trim(hash == std::string::npos ? raw : raw.substr(0, hash));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& tok, int line, const char* what) {
    std::uint64_t v = 0;
    if (tok.empty()) throw ParseError(std::string("missing ") + what, line, 1);
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line, 1);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string hash_source(const GroupDef& def) {
    std::ostringstream canon;
    canon << "order " << def.declared_order << '\n';
    if (def.perm) {
        canon << "perm " << def.perm->degree << '\n';
        for (const std::string& g : def.perm->generator_lines) canon << g << '\n';
    } else {
        canon << "pres\n" << def.pres->text << '\n';
    }
    return fnv1a_hex(canon.str());
}

fs::path cache_dir_for(const std::string& catalog_path) {
    if (const char* env = std::getenv("IPV_CACHE_DIR"); env != nullptr && *env != '\0')
        return fs::path(env);
    fs::path p(catalog_path);
    return p.has_parent_path() ? p.parent_path() / ".ipv-cache"
                               : fs::path(".ipv-cache");
}

// ---------------------------------------------------------------- realize

PermGroup realize_from_source(const GroupDef& def) {
    if (def.perm) {
        std::vector<Perm> gens;
        gens.reserve(def.perm->generator_lines.size());
        for (const std::string& line : def.perm->generator_lines)
            gens.push_back(parse_cycles(line, def.perm->degree));
        PermGroup g = PermGroup::from_generators(def.perm->degree, std::move(gens),
                                                 PermGroup::kHardCap);
        if (g.order() != def.declared_order)
            throw OrderMismatch(def.name, def.declared_order, g.order());
        return g;
    }
    Presentation p = parse_presentation(def.pres->text);
    CosetTable t = todd_coxeter(p);
    if (t.live_cosets != def.declared_order)
        throw OrderMismatch(def.name, def.declared_order, t.live_cosets);
    auto [degree, gens] = permutation_rep(t);
    PermGroup g =
        PermGroup::from_generators(degree, std::move(gens), PermGroup::kHardCap);
    if (g.order() != def.declared_order)
        throw OrderMismatch(def.name, def.declared_order, g.order());
    return g;
}

// ------------------------------------------------------------------ cache

constexpr const char* kCacheMagic = "IPV1";

void write_cache(const fs::path& file, const GroupDef& def, const PermGroup& g) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    if (ec) return;  // caching is best-effort
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << kCacheMagic << '\n';
        out << "hash " << def.source_hash << '\n';
        out << "order " << g.order() << '\n';
        out << "degree " << g.degree() << '\n';
        out << "gens " << g.generators().size() << '\n';
        for (const Perm& p : g.generators()) {
            for (std::uint32_t i = 0; i < p.degree(); ++i)
                out << (i ? " " : "") << p.img[i];
            out << '\n';
        }
        out << "element-orders";
        for (std::uint32_t i = 0; i < g.order(); ++i) out << ' ' << g.element_order(i);
        out << '\n';
        out << "class-sizes";
        for (const auto& cls : g.conjugacy_classes()) out << ' ' << cls.size();
        out << '\n';
        out << "center " << g.center().count() << '\n';
    }
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
}

/// Rebuilds the group from the cached generator tables and cross-checks the
/// cached invariants against the rebuilt group.  Throws CacheCorrupt on any
/// disagreement or malformation.
PermGroup read_cache(const fs::path& file, const GroupDef& def) {
    std::ifstream in(file);
    if (!in) throw CacheCorrupt("cache entry unreadable");
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCacheMagic)
        throw CacheCorrupt("bad cache magic");

    auto expect_kv = [&](const char* key) -> std::string {
        if (!std::getline(in, line)) throw CacheCorrupt("truncated cache entry");
        auto toks = split_ws(trim(line));
        if (toks.size() < 2 || toks[0] != key)
            throw CacheCorrupt(std::string("missing cache field ") + key);
        return toks[1];
    };

    if (expect_kv("hash") != def.source_hash)
        throw CacheCorrupt("cache entry hash mismatch");
    const std::uint64_t order = std::strtoull(expect_kv("order").c_str(), nullptr, 10);
    const std::uint64_t degree = std::strtoull(expect_kv("degree").c_str(), nullptr, 10);
    const std::uint64_t ngens = std::strtoull(expect_kv("gens").c_str(), nullptr, 10);
    if (order == 0 || order != def.declared_order || degree == 0 || degree > 100000)
        throw CacheCorrupt("cache entry order/degree mismatch");

    std::vector<Perm> gens;
    for (std::uint64_t i = 0; i < ngens; ++i) {
        if (!std::getline(in, line)) throw CacheCorrupt("truncated generator table");
        Perm p;
        for (const std::string& tok : split_ws(trim(line))) {
            char* end = nullptr;
            unsigned long v = std::strtoul(tok.c_str(), &end, 10);
            if (end == nullptr || *end != '\0' || v >= degree)
                throw CacheCorrupt("malformed generator image");
            p.img.push_back(static_cast<std::uint32_t>(v));
        }
        if (p.degree() != degree) throw CacheCorrupt("generator has wrong degree");
        try {
            p.validate();
        } catch (const Error&) {
            throw CacheCorrupt("generator is not a permutation");
        }
        gens.push_back(std::move(p));
    }

    PermGroup g = [&] {
        try {
            return PermGroup::from_generators(static_cast<std::uint32_t>(degree),
                                              std::move(gens), PermGroup::kHardCap);
        } catch (const Error&) {
            throw CacheCorrupt("cached generators do not close");
        }
    }();
    if (g.order() != def.declared_order) throw CacheCorrupt("cached order mismatch");

    // Cross-check the stored tables against the rebuilt group.
    if (!std::getline(in, line)) throw CacheCorrupt("missing element orders");
    {
        auto toks = split_ws(trim(line));
        if (toks.size() != g.order() + 1 || toks[0] != "element-orders")
            throw CacheCorrupt("malformed element orders");
        for (std::uint32_t i = 0; i < g.order(); ++i)
            if (std::strtoul(toks[i + 1].c_str(), nullptr, 10) != g.element_order(i))
                throw CacheCorrupt("cached element order disagrees");
    }
    if (!std::getline(in, line)) throw CacheCorrupt("missing class sizes");
    {
        auto toks = split_ws(trim(line));
        const auto& classes = g.conjugacy_classes();
        if (toks.size() != classes.size() + 1 || toks[0] != "class-sizes")
            throw CacheCorrupt("malformed class sizes");
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (std::strtoul(toks[i + 1].c_str(), nullptr, 10) != classes[i].size())
                throw CacheCorrupt("cached class size disagrees");
    }
    if (expect_kv("center") != std::to_string(g.center().count()))
        throw CacheCorrupt("cached center size disagrees");
    return g;
}

PermGroup realize(const GroupDef& def, const fs::path& cache_dir) {
    const fs::path file = cache_dir / (def.source_hash + ".ipv");
    std::error_code ec;
    if (fs::exists(file, ec)) {
        try {
            return read_cache(file, def);
        } catch (const CacheCorrupt& e) {
            std::cerr << "catalog cache: rebuilding '" << def.name
                      << "' from source (" << e.what() << ")\n";
        }
    }
    PermGroup g = realize_from_source(def);
    write_cache(file, def, g);
    return g;
}

// ------------------------------------------------------------------ parse

CatalogManifest parse_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file '" + path + "'", 0, 0);

    CatalogManifest m;
    m.path = path;

    GroupDef cur;
    bool have_group = false;
    bool want_pres_text = false;
    int group_line = 0;

    auto finish_group = [&](int line) {
        if (!have_group) return;
        if (want_pres_text)
            throw ParseError("group '" + cur.name + "' has a pres line but no text",
                             group_line, 1);
        if (!cur.perm && !cur.pres)
            throw ParseError("group '" + cur.name + "' has no realization source",
                             group_line, 1);
        (void)line;
        m.groups.push_back(std::move(cur));
        cur = GroupDef{};
        have_group = false;
    };

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_line(raw);
        if (line.empty()) continue;

        if (want_pres_text) {
            if (line[0] != '<')
                throw ParseError("presentation text (starting with '<') must follow "
                                 "a pres line",
                                 lineno, 1);
            cur.pres = PresSource{line};
            want_pres_text = false;
            continue;
        }

        if (line[0] == '(') {
            if (!have_group || !cur.perm)
                throw ParseError("generator line outside a perm block", lineno, 1);
            cur.perm->generator_lines.push_back(line);
            continue;
        }

        auto toks = split_ws(line);
        const std::string& kw = toks[0];
        if (kw == "expect") {
            if (toks.size() != 5 || toks[1] != "order" || toks[3] != "count")
                throw ParseError("expected 'expect order <k> count <c>'", lineno, 1);
            finish_group(lineno);
            const std::uint64_t k = parse_u64(toks[2], lineno, "order");
            const std::uint64_t c = parse_u64(toks[4], lineno, "count");
            m.expected_counts[k] = static_cast<std::uint32_t>(c);
        } else if (kw == "group") {
            finish_group(lineno);
            if (toks.size() != 4 || toks[2] != "order")
                throw ParseError("expected 'group <name> order <k>'", lineno, 1);
            cur = GroupDef{};
            cur.name = toks[1];
            cur.declared_order = parse_u64(toks[3], lineno, "order");
            if (cur.declared_order == 0)
                throw ParseError("group order must be positive", lineno, 1);
            have_group = true;
            group_line = lineno;
        } else if (kw == "tags") {
            if (!have_group || cur.perm || cur.pres)
                throw ParseError("tags must directly follow a group line", lineno, 1);
            cur.tags.assign(toks.begin() + 1, toks.end());
        } else if (kw == "perm") {
            if (!have_group || cur.perm || cur.pres)
                throw ParseError("perm block outside a group", lineno, 1);
            if (toks.size() != 3 || toks[1] != "degree")
                throw ParseError("expected 'perm degree <d>'", lineno, 1);
            const std::uint64_t d = parse_u64(toks[2], lineno, "degree");
            if (d == 0 || d > 100000)
                throw ParseError("unusable permutation degree", lineno, 1);
            cur.perm = PermSource{static_cast<std::uint32_t>(d), {}};
        } else if (kw == "pres") {
            if (!have_group || cur.perm || cur.pres)
                throw ParseError("pres block outside a group", lineno, 1);
            if (toks.size() != 1)
                throw ParseError("pres takes no arguments; the text follows on "
                                 "the next line",
                                 lineno, 1);
            want_pres_text = true;
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno, 1);
        }
    }
    finish_group(lineno + 1);

    for (GroupDef& def : m.groups) def.source_hash = hash_source(def);
    return m;
}

// ----------------------------------------------------------- invariants

struct InvariantKey {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order_histogram;
    std::vector<std::size_t> class_sizes;  // sorted
    std::vector<std::pair<std::uint32_t, std::uint32_t>> abelianization;
    std::uint32_t derived_order = 0;
    std::uint32_t center_size = 0;

    friend bool operator==(const InvariantKey& a, const InvariantKey& b) {
        return a.order_histogram == b.order_histogram && a.class_sizes == b.class_sizes &&
               a.abelianization == b.abelianization && a.derived_order == b.derived_order &&
               a.center_size == b.center_size;
    }
};

InvariantKey invariants_of(const PermGroup& g) {
    InvariantKey k;
    k.order_histogram.assign(g.order_histogram().begin(), g.order_histogram().end());
    for (const auto& cls : g.conjugacy_classes()) k.class_sizes.push_back(cls.size());
    std::sort(k.class_sizes.begin(), k.class_sizes.end());
    k.abelianization.assign(g.abelianization_histogram().begin(),
                            g.abelianization_histogram().end());
    k.derived_order = g.derived_subgroup_order();
    k.center_size = g.center().count();
    return k;
}

}  // namespace

// ------------------------------------------------------------------ class

Catalog Catalog::load(const std::string& path) {
    Catalog cat;
    cat.manifest_ = parse_catalog(path);

    for (std::size_t i = 0; i < cat.manifest_.groups.size(); ++i) {
        const GroupDef& def = cat.manifest_.groups[i];
        if (cat.index_.count(def.name)) throw DuplicateName(def.name);
        cat.index_[def.name] = i;
    }

    const fs::path dir = cache_dir_for(path);
    cat.realized_.reserve(cat.manifest_.groups.size());
    for (const GroupDef& def : cat.manifest_.groups)
        cat.realized_.push_back(std::make_unique<PermGroup>(realize(def, dir)));
    return cat;
}

const PermGroup& Catalog::group(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownGroup(name);
    return *realized_[it->second];
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    out.reserve(manifest_.groups.size());
    for (const GroupDef& def : manifest_.groups) out.push_back(def.name);
    return out;
}

std::vector<std::string> Catalog::names_for_order(std::uint64_t order) const {
    std::vector<std::string> out;
    for (const GroupDef& def : manifest_.groups)
        if (def.declared_order == order) out.push_back(def.name);
    return out;
}

CompletenessReport Catalog::completeness(
    const std::vector<std::uint64_t>& orders) const {
    CompletenessReport rep;
    for (std::uint64_t order : orders) {
        OrderCompleteness row;
        row.order = order;
        if (auto it = manifest_.expected_counts.find(order);
            it != manifest_.expected_counts.end())
            row.expected = it->second;

        std::vector<std::size_t> members;
        std::vector<InvariantKey> keys;
        for (std::size_t i = 0; i < manifest_.groups.size(); ++i) {
            if (manifest_.groups[i].declared_order != order) continue;
            ++row.actual;
            members.push_back(i);
            keys.push_back(invariants_of(*realized_[i]));
        }
        // Cheap invariants prefilter the pairs; equal-key pairs get the
        // exact isomorphism test, so a collision is a genuine duplicate.
        row.pairwise_distinct = true;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                if (!(keys[a] == keys[b])) continue;
                if (!are_isomorphic(*realized_[members[a]], *realized_[members[b]]))
                    continue;
                row.pairwise_distinct = false;
                row.collisions.emplace_back(manifest_.groups[members[a]].name,
                                            manifest_.groups[members[b]].name);
            }
        row.status = row.expected.has_value() && row.actual == *row.expected &&
                             row.pairwise_distinct
                         ? OrderStatus::PASS
                         : OrderStatus::WARN;
        if (row.status != OrderStatus::PASS) rep.all_pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace prodquot
