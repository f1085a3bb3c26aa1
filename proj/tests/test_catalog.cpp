#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "prodquot/catalog.hpp"
#include "prodquot/errors.hpp"

using namespace prodquot;
namespace fs = std::filesystem;

namespace {

/// Scratch directory holding one catalog file (plus its default cache dir).
/// Removed on destruction, so cache state never leaks between test cases.
struct ScratchDir {
    fs::path dir;

    ScratchDir() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("prodquot-catalog-test-" + std::to_string(counter++));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    std::string write(const std::string& name, const std::string& text) const {
        fs::path p = dir / name;
        std::ofstream out(p);
        out << text;
        return p.string();
    }
};

/// Sets IPV_CACHE_DIR for the lifetime of the guard and restores the prior
/// state afterwards.
struct CacheDirGuard {
    bool had_old;
    std::string old_value;

    explicit CacheDirGuard(const fs::path& p) {
        const char* old = std::getenv("IPV_CACHE_DIR");
        had_old = old != nullptr;
        if (had_old) old_value = old;
        setenv("IPV_CACHE_DIR", p.string().c_str(), 1);
    }
    ~CacheDirGuard() {
        if (had_old)
            setenv("IPV_CACHE_DIR", old_value.c_str(), 1);
        else
            unsetenv("IPV_CACHE_DIR");
    }
};

const char* kTwoGroupCatalog =
    "# two groups of order six, one from each kind of source\n"
    "expect order 6 count 2\n"
    "\n"
    "group c6 order 6\n"
    "tags abelian cyclic\n"
    "perm degree 6\n"
    "(0 1 2 3 4 5)\n"
    "\n"
    "group s3 order 6\n"
    "pres\n"
    "< x, y | x^2, y^2, (x*y)^3 >\n";

std::vector<std::vector<std::uint32_t>> element_table(const PermGroup& g) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t i = 0; i < g.order(); ++i) out.push_back(g.element(i).img);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> cache_files(const fs::path& dir) {
    std::vector<fs::path> out;
    if (!fs::exists(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".ipv") out.push_back(entry.path());
    return out;
}

}  // namespace

TEST_CASE("catalog realizes permutation and presentation sources") {
    ScratchDir scratch;
    Catalog cat = load_catalog(scratch.write("two.cat", kTwoGroupCatalog));

    CHECK(cat.names() == std::vector<std::string>{"c6", "s3"});
    CHECK(cat.has("c6"));
    CHECK(cat.has("s3"));
    CHECK(!cat.has("q8"));
    CHECK(cat.names_for_order(6) == std::vector<std::string>{"c6", "s3"});
    CHECK(cat.names_for_order(7).empty());

    const PermGroup& c6 = cat.group("c6");
    CHECK(c6.order() == 6);
    CHECK(c6.order_spectrum() == std::vector<std::uint32_t>{1, 2, 3, 6});
    CHECK(c6.derived_subgroup_order() == 1);

    const PermGroup& s3 = cat.group("s3");
    CHECK(s3.order() == 6);
    CHECK(s3.order_spectrum() == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(s3.derived_subgroup_order() == 3);
    CHECK(s3.center().count() == 1);

    CHECK_THROWS_AS(cat.group("q8"), UnknownGroup);
    try {
        cat.group("q8");
    } catch (const UnknownGroup& e) {
        CHECK(e.name == "q8");
    }

    const CatalogManifest& m = cat.manifest();
    REQUIRE(m.groups.size() == 2);
    CHECK(m.groups[0].name == "c6");
    CHECK(m.groups[0].declared_order == 6);
    CHECK(m.groups[0].tags == std::vector<std::string>{"abelian", "cyclic"});
    CHECK(m.groups[0].perm.has_value());
    CHECK(m.groups[0].perm->degree == 6);
    CHECK(!m.groups[0].pres.has_value());
    CHECK(m.groups[1].pres.has_value());
    CHECK(m.groups[1].tags.empty());
    REQUIRE(m.expected_counts.count(6) == 1);
    CHECK(m.expected_counts.at(6) == 2);
    CHECK(m.groups[0].source_hash.size() == 16);
    CHECK(m.groups[0].source_hash != m.groups[1].source_hash);
}

TEST_CASE("catalog verifies declared orders") {
    ScratchDir scratch;

    SUBCASE("permutation source realizing the wrong order") {
        std::string path = scratch.write(
            "bad.cat",
            "group c20 order 40\n"
            "perm degree 20\n"
            "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19)\n");
        try {
            load_catalog(path);
            FAIL("expected OrderMismatch");
        } catch (const OrderMismatch& e) {
            CHECK(e.name == "c20");
            CHECK(e.expected == 40);
            CHECK(e.actual == 20);
        }
    }

    SUBCASE("presentation source realizing the wrong order") {
        std::string path = scratch.write(
            "bad.cat",
            "group s3 order 5\n"
            "pres\n"
            "< x, y | x^2, y^2, (x*y)^3 >\n");
        try {
            load_catalog(path);
            FAIL("expected OrderMismatch");
        } catch (const OrderMismatch& e) {
            CHECK(e.name == "s3");
            CHECK(e.expected == 5);
            CHECK(e.actual == 6);
        }
    }
}

TEST_CASE("catalog rejects duplicate names") {
    ScratchDir scratch;
    std::string path = scratch.write("dup.cat",
                                     "group g order 2\n"
                                     "perm degree 2\n"
                                     "(0 1)\n"
                                     "group g order 3\n"
                                     "perm degree 3\n"
                                     "(0 1 2)\n");
    try {
        load_catalog(path);
        FAIL("expected DuplicateName");
    } catch (const DuplicateName& e) {
        CHECK(e.name == "g");
    }
}

TEST_CASE("catalog parse errors carry positions") {
    ScratchDir scratch;

    auto expect_parse_error = [&](const std::string& text, int line) {
        std::string path = scratch.write("bad.cat", text);
        try {
            load_catalog(path);
            FAIL(("expected ParseError for: " + text));
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };

    expect_parse_error("# header\n\nfrobnicate all the things\n", 3);
    expect_parse_error("perm degree 6\n", 1);
    expect_parse_error("(0 1)\n", 1);
    expect_parse_error("tags loose\n", 1);
    expect_parse_error("group g order six\n", 1);
    expect_parse_error("group g order 0\n", 1);
    expect_parse_error("group g order\n", 1);
    expect_parse_error("expect order 6\n", 1);
    expect_parse_error("group g order 6\nperm degree\n", 2);
    expect_parse_error("group g order 6\nperm degree 6\nperm degree 6\n", 3);
    // pres text must start with '<'
    expect_parse_error("group g order 6\npres\nx^2\n", 3);
    // pres with no following text at all
    expect_parse_error("group g order 6\npres\n", 1);
    // group that never names a source
    expect_parse_error("group g order 6\n", 1);
    expect_parse_error("group g order 6\ngroup h order 6\nperm degree 6\n(0 1 2 3 4 5)\n",
                       1);
    // pres takes no inline arguments
    expect_parse_error("group g order 6\npres < x | x^6 >\n", 2);

    CHECK_THROWS_AS(load_catalog((scratch.dir / "missing.cat").string()), ParseError);
}

TEST_CASE("catalog surfaces malformed generator text as errors") {
    ScratchDir scratch;

    // Point out of range for the declared degree.
    std::string path = scratch.write("bad.cat",
                                     "group g order 6\n"
                                     "perm degree 6\n"
                                     "(0 7)\n");
    CHECK_THROWS_AS(load_catalog(path), Error);

    // Unclosed cycle.
    path = scratch.write("bad2.cat",
                         "group g order 6\n"
                         "perm degree 6\n"
                         "(0 1 2\n");
    CHECK_THROWS_AS(load_catalog(path), Error);

    // Presentation using an undeclared generator.
    path = scratch.write("bad3.cat",
                         "group g order 6\n"
                         "pres\n"
                         "< x | x^2, y^3 >\n");
    CHECK_THROWS_AS(load_catalog(path), Error);
}

TEST_CASE("completeness report distinguishes PASS and WARN") {
    ScratchDir scratch;

    SUBCASE("matching count with distinct groups passes") {
        Catalog cat = load_catalog(scratch.write("two.cat", kTwoGroupCatalog));
        CompletenessReport rep = cat.completeness({6});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].order == 6);
        REQUIRE(rep.rows[0].expected.has_value());
        CHECK(*rep.rows[0].expected == 2);
        CHECK(rep.rows[0].actual == 2);
        CHECK(rep.rows[0].pairwise_distinct);
        CHECK(rep.rows[0].collisions.empty());
        CHECK(rep.rows[0].status == OrderStatus::PASS);
        CHECK(rep.all_pass);
    }

    SUBCASE("count shortfall warns") {
        std::string path = scratch.write("short.cat",
                                         "expect order 6 count 3\n"
                                         "group c6 order 6\n"
                                         "perm degree 6\n"
                                         "(0 1 2 3 4 5)\n"
                                         "group s3 order 6\n"
                                         "pres\n"
                                         "< x, y | x^2, y^2, (x*y)^3 >\n");
        Catalog cat = load_catalog(path);
        CompletenessReport rep = cat.completeness({6});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].actual == 2);
        CHECK(rep.rows[0].pairwise_distinct);
        CHECK(rep.rows[0].status == OrderStatus::WARN);
        CHECK(!rep.all_pass);
    }

    SUBCASE("missing expectation warns even when groups are present") {
        std::string path = scratch.write("noexp.cat",
                                         "group c6 order 6\n"
                                         "perm degree 6\n"
                                         "(0 1 2 3 4 5)\n");
        Catalog cat = load_catalog(path);
        CompletenessReport rep = cat.completeness({6});
        REQUIRE(rep.rows.size() == 1);
        CHECK(!rep.rows[0].expected.has_value());
        CHECK(rep.rows[0].actual == 1);
        CHECK(rep.rows[0].status == OrderStatus::WARN);
        CHECK(!rep.all_pass);
    }

    SUBCASE("invariant collision warns and names the pair") {
        std::string path = scratch.write("coll.cat",
                                         "expect order 6 count 2\n"
                                         "group c6a order 6\n"
                                         "perm degree 6\n"
                                         "(0 1 2 3 4 5)\n"
                                         "group c6b order 6\n"
                                         "perm degree 6\n"
                                         "(0 2 4 1 3 5)\n");
        Catalog cat = load_catalog(path);
        CompletenessReport rep = cat.completeness({6});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].actual == 2);
        CHECK(!rep.rows[0].pairwise_distinct);
        REQUIRE(rep.rows[0].collisions.size() == 1);
        CHECK(rep.rows[0].collisions[0] ==
              std::pair<std::string, std::string>{"c6a", "c6b"});
        CHECK(rep.rows[0].status == OrderStatus::WARN);
        CHECK(!rep.all_pass);
    }

    SUBCASE("declared-empty order passes vacuously") {
        std::string path = scratch.write("empty.cat",
                                         "expect order 10 count 0\n"
                                         "group c6 order 6\n"
                                         "perm degree 6\n"
                                         "(0 1 2 3 4 5)\n");
        Catalog cat = load_catalog(path);
        CompletenessReport rep = cat.completeness({10});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].actual == 0);
        CHECK(rep.rows[0].pairwise_distinct);
        CHECK(rep.rows[0].status == OrderStatus::PASS);
        CHECK(rep.all_pass);
    }

    SUBCASE("empty query is vacuously all-pass") {
        Catalog cat = load_catalog(scratch.write("two.cat", kTwoGroupCatalog));
        CompletenessReport rep = cat.completeness({});
        CHECK(rep.rows.empty());
        CHECK(rep.all_pass);
    }
}

TEST_CASE("repeated loads produce identical element indexing") {
    ScratchDir scratch;
    std::string path = scratch.write("two.cat", kTwoGroupCatalog);

    Catalog first = load_catalog(path);
    Catalog second = load_catalog(path);  // second load sees the cache

    for (const std::string& name : first.names()) {
        const PermGroup& a = first.group(name);
        const PermGroup& b = second.group(name);
        REQUIRE(a.order() == b.order());
        REQUIRE(a.degree() == b.degree());
        CHECK(element_table(a) == element_table(b));
    }

    // The default cache directory sits next to the catalog file.
    CHECK(cache_files(scratch.dir / ".ipv-cache").size() == 2);
}

TEST_CASE("cache honors IPV_CACHE_DIR and survives corruption") {
    ScratchDir scratch;
    fs::path cache_dir = scratch.dir / "alt-cache";
    CacheDirGuard guard(cache_dir);

    std::string path = scratch.write("two.cat", kTwoGroupCatalog);
    Catalog first = load_catalog(path);
    auto tables = std::map<std::string, std::vector<std::vector<std::uint32_t>>>{};
    for (const std::string& name : first.names())
        tables[name] = element_table(first.group(name));

    std::vector<fs::path> files = cache_files(cache_dir);
    REQUIRE(files.size() == 2);
    CHECK(cache_files(scratch.dir / ".ipv-cache").empty());
    for (const fs::path& f : files) CHECK(slurp(f).rfind("IPV1\n", 0) == 0);

    SUBCASE("clean reload reuses the cache and matches") {
        Catalog again = load_catalog(path);
        for (const std::string& name : again.names())
            CHECK(element_table(again.group(name)) == tables[name]);
    }

    SUBCASE("garbage cache entries are rebuilt transparently") {
        for (const fs::path& f : files) {
            std::ofstream out(f, std::ios::trunc);
            out << "garbage\n";
        }
        Catalog again = load_catalog(path);
        for (const std::string& name : again.names())
            CHECK(element_table(again.group(name)) == tables[name]);
        // The corrupt entries were rewritten with valid contents.
        for (const fs::path& f : cache_files(cache_dir))
            CHECK(slurp(f).rfind("IPV1\n", 0) == 0);
    }

    SUBCASE("entries with a stale hash are rebuilt transparently") {
        for (const fs::path& f : files) {
            std::string text = slurp(f);
            auto pos = text.find("hash ");
            REQUIRE(pos != std::string::npos);
            text[pos + 5] = text[pos + 5] == '0' ? '1' : '0';
            std::ofstream out(f, std::ios::trunc);
            out << text;
        }
        Catalog again = load_catalog(path);
        for (const std::string& name : again.names())
            CHECK(element_table(again.group(name)) == tables[name]);
    }

    SUBCASE("entries whose stored tables disagree are rebuilt") {
        // Flip one cached element order; the cross-check must reject it.
        for (const fs::path& f : files) {
            std::string text = slurp(f);
            auto pos = text.find("element-orders 1");
            REQUIRE(pos != std::string::npos);
            text[pos + 15] = '9';
            std::ofstream out(f, std::ios::trunc);
            out << text;
        }
        Catalog again = load_catalog(path);
        for (const std::string& name : again.names())
            CHECK(element_table(again.group(name)) == tables[name]);
    }
}

TEST_CASE("catalog ingestion is idempotent across manifests") {
    ScratchDir scratch_a;
    ScratchDir scratch_b;
    // The same definitions written to two different files (one with extra
    // comments and blank lines) must realize identical groups.
    std::string path_a = scratch_a.write("a.cat", kTwoGroupCatalog);
    std::string noisy = std::string("# noisy copy\n\n") + kTwoGroupCatalog +
                        "\n# trailing comment\n";
    std::string path_b = scratch_b.write("b.cat", noisy);

    Catalog a = load_catalog(path_a);
    Catalog b = load_catalog(path_b);
    CHECK(a.names() == b.names());
    for (const std::string& name : a.names()) {
        CHECK(element_table(a.group(name)) == element_table(b.group(name)));
        CHECK(a.manifest().groups[0].source_hash == b.manifest().groups[0].source_hash);
    }
}
