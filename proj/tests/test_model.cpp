#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coringlab/gallery.hpp"
#include "coringlab/model.hpp"
#include "coringlab/rng.hpp"

using namespace coringlab;

namespace {

std::string first_error(const ParseResult& r) {
    REQUIRE(!r.errors.empty());
    return r.errors.front().render();
}

const char* grouplike_text =
    "field p=2\n"
    "algebra f2 dim=1\n"
    "mul 0 0 = 0:1\n"
    "unit = 0:1\n"
    "bimodule cg left=f2 right=f2 dim=2\n"
    "lact 0 0 = 0:1\n"
    "lact 0 1 = 1:1\n"
    "ract 0 0 = 0:1\n"
    "ract 0 1 = 1:1\n"
    "coring grp on cg\n"
    "delta 0 = 0,0:1\n"
    "delta 1 = 1,1:1\n"
    "eps 0 = 0:1\n"
    "eps 1 = 0:1\n";

} // namespace

TEST_CASE("empty file is rejected with a clear message") {
    ParseResult r = parse_model("");
    CHECK(!r.ok());
    CHECK(first_error(r) == "error: missing field declaration");

    ParseResult r2 = parse_model("# only a comment\n\n");
    CHECK(!r2.ok());
    CHECK(first_error(r2) == "error: missing field declaration");
}

TEST_CASE("field must come first and be prime") {
    ParseResult r = parse_model("algebra a dim=1\n");
    CHECK(!r.ok());
    CHECK(first_error(r).find("line 1") == 0);

    ParseResult composite = parse_model("field p=6\n");
    CHECK(!composite.ok());
    CHECK(first_error(composite).find("prime") != std::string::npos);

    ParseResult large = parse_model("field p=257\n");
    CHECK(!large.ok());
}

TEST_CASE("scalars at or above p are positioned errors, never reduced") {
    const std::string text =
        "field p=3\n"
        "algebra a dim=1\n"
        "mul 0 0 = 0:5\n"
        "unit = 0:1\n";
    ParseResult r = parse_model(text);
    CHECK(!r.ok());
    const std::string msg = first_error(r);
    CHECK(msg.find("line 3") == 0);
    CHECK(msg.find("5") != std::string::npos);
}

TEST_CASE("references must be declared before use") {
    const std::string text =
        "field p=2\n"
        "coring c on nowhere\n";
    ParseResult r = parse_model(text);
    CHECK(!r.ok());
    const std::string msg = first_error(r);
    CHECK(msg.find("line 2") == 0);
    CHECK(msg.find("nowhere") != std::string::npos);
}

TEST_CASE("duplicate rows and duplicate names are rejected") {
    const std::string dup_row =
        "field p=2\n"
        "algebra a dim=1\n"
        "mul 0 0 = 0:1\n"
        "mul 0 0 = 0:1\n"
        "unit = 0:1\n";
    ParseResult r = parse_model(dup_row);
    CHECK(!r.ok());
    CHECK(first_error(r).find("line 4") == 0);

    const std::string dup_name =
        "field p=2\n"
        "algebra a dim=1\n"
        "mul 0 0 = 0:1\n"
        "unit = 0:1\n"
        "algebra a dim=1\n"
        "mul 0 0 = 0:1\n"
        "unit = 0:1\n";
    ParseResult r2 = parse_model(dup_name);
    CHECK(!r2.ok());
    CHECK(first_error(r2).find("line 5") == 0);
}

TEST_CASE("out-of-range indices are positioned errors") {
    const std::string text =
        "field p=2\n"
        "algebra a dim=2\n"
        "mul 0 2 = 0:1\n"
        "unit = 0:1\n";
    ParseResult r = parse_model(text);
    CHECK(!r.ok());
    CHECK(first_error(r).find("line 3") == 0);
}

TEST_CASE("broken coassociativity parses but fails validation naming a basis vector") {
    // delta e1 = e0 (x) e0 + e1 (x) e1: the two re-expansion routes differ in
    // the middle leg, so coassociativity fails exactly at basis vector 1.
    std::string text = grouplike_text;
    const std::string needle = "delta 1 = 1,1:1";
    text.replace(text.find(needle), needle.size(), "delta 1 = 0,0:1 + 1,1:1");
    ParseResult r = parse_model(text);
    REQUIRE(r.ok());
    const CoringDecl* c = r.model->find_coring("grp");
    REQUIRE(c != nullptr);
    auto errs = c->coring.validate();
    REQUIRE(!errs.empty());
    bool names_vector = false;
    for (const auto& e : errs)
        if (e.find("coassociative") != std::string::npos &&
            e.find("basis vector 1") != std::string::npos)
            names_vector = true;
    CHECK(names_vector);
}

TEST_CASE("gallery files parse and round-trip byte for byte") {
    const auto& entries = gallery_entries();
    REQUIRE(entries.size() == 6);
    for (const auto& entry : entries) {
        CAPTURE(entry.filename);
        ParseResult r = parse_model(entry.text);
        for (const auto& e : r.errors) CAPTURE(e.render());
        REQUIRE(r.ok());
        CHECK(render_model(*r.model) == entry.text);
    }
}

TEST_CASE("gallery content is deterministic") {
    const auto& a = gallery_entries();
    const auto& b = gallery_entries();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].filename == b[i].filename);
        CHECK(a[i].text == b[i].text);
    }
}

TEST_CASE("declared objects carry their structure through parsing") {
    ParseResult r = parse_model(grouplike_text);
    REQUIRE(r.ok());
    const ModelFile& m = *r.model;
    CHECK(m.p == 2);
    REQUIRE(m.find_algebra("f2") != nullptr);
    CHECK(m.find_algebra("f2")->algebra.validate().empty());
    REQUIRE(m.find_coring("grp") != nullptr);
    CHECK(m.find_coring("grp")->coring.validate().empty());
    CHECK(m.find_coring("grp")->coring.dim() == 2);
}

TEST_CASE("parsing is total on fuzzed garbage") {
    Rng rng(99);
    const char alphabet[] = "abcdefgh01234 =:,+#\n\t";
    for (int round = 0; round < 200; ++round) {
        std::string text = "field p=2\n";
        const std::size_t len = rng.below(200);
        for (std::size_t i = 0; i < len; ++i)
            text += alphabet[rng.below(sizeof(alphabet) - 1)];
        ParseResult r = parse_model(text);  // must not throw or crash
        if (r.ok()) CHECK(r.model.has_value());
    }
}

TEST_CASE("error list is capped so floods of bad lines stay bounded") {
    std::string text = "field p=2\n";
    for (int i = 0; i < 300; ++i) text += "garbage line here\n";
    ParseResult r = parse_model(text);
    CHECK(!r.ok());
    CHECK(r.errors.size() <= 64);
}
