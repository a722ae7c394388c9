#include <algorithm>
#include <string>

#include "doctest.h"
#include "permdiag/permdiag.h"

namespace {

struct Session {
    pd_options* options = pd_options_create();
    pd_result* result = nullptr;
    ~Session()
    {
        pd_result_destroy(result);
        pd_options_destroy(options);
    }
    std::string text() const { return pd_result_text(result); }
};

}  // namespace

TEST_CASE("commands through the C interface")
{
    Session s;
    REQUIRE(s.options != nullptr);
    CHECK(pd_boundary(s.options, "12", &s.result) == PD_OK);
    CHECK(s.text() == "+ 2|1  - 1|2\n");
    CHECK(pd_result_size(s.result) == s.text().size());
}

TEST_CASE("perm-diagonal 3 prints eight terms")
{
    Session s;
    REQUIRE(pd_perm_diagonal(s.options, 3, &s.result) == PD_OK);
    const std::string t = s.text();
    CHECK(std::count(t.begin(), t.end(), '\n') == 8);
}

TEST_CASE("assoc-diagonal both reports agreement")
{
    Session s;
    REQUIRE(pd_assoc_diagonal(s.options, 2, PD_METHOD_BOTH, &s.result) == PD_OK);
    CHECK(s.text().size() >= 3);
    CHECK(s.text().substr(s.text().size() - 3) == "OK\n");
}

TEST_CASE("errors carry a status and a message")
{
    Session s;
    CHECK(pd_boundary(s.options, "1|1", &s.result) == PD_PARSE_ERROR);
    CHECK(s.result == nullptr);
    CHECK(std::string(pd_last_error()).find("1|1") != std::string::npos);
    CHECK(pd_perm_diagonal(s.options, 9, &s.result) == PD_OUT_OF_RANGE);
    CHECK(pd_options_set_cap(s.options, 0) == PD_OUT_OF_RANGE);
    CHECK(pd_options_set_format(s.options, static_cast<pd_format>(7)) == PD_INVALID_ARGUMENT);
    CHECK(pd_perm_diagonal(nullptr, 3, &s.result) == PD_INVALID_ARGUMENT);
    CHECK(pd_boundary(s.options, nullptr, &s.result) == PD_INVALID_ARGUMENT);
    CHECK(pd_qcheck(s.options, "12|3", "1|2|3", &s.result) == PD_INVALID_ARGUMENT);
    CHECK(std::string(pd_status_name(PD_VERIFY_FAILED)) == "verification failed");
}

TEST_CASE("json output")
{
    Session s;
    REQUIRE(pd_options_set_format(s.options, PD_FORMAT_JSON) == PD_OK);
    REQUIRE(pd_qcheck(s.options, "12|345678", "1234|567", &s.result) == PD_OK);
    CHECK(s.text().find("\"bracket\": \"12|345|678\"") != std::string::npos);
}

TEST_CASE("verify runs a filtered set of suites")
{
    Session s;
    REQUIRE(pd_options_set_jobs(s.options, 2) == PD_OK);
    CHECK(pd_verify(s.options, 4, 0, "core", &s.result) == PD_OK);
    CHECK(s.text().find("5 passed, 0 failed") != std::string::npos);
    pd_result_destroy(s.result);
    s.result = nullptr;
    CHECK(pd_verify(s.options, 4, 1, "high-relations-vertices", &s.result) == PD_VERIFY_FAILED);
    CHECK(s.text().find("known deviation") != std::string::npos);
}
