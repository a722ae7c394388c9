#include "permdiag/permdiag.h"

#include <new>
#include <string>

#include "permdiag/commands.hpp"
#include "permdiag/error.hpp"

struct pd_options {
    pd::Options opts;
};

struct pd_result {
    std::string text;
};

namespace {

thread_local std::string last_error;

pd_status status_of(pd::Errc e)
{
    switch (e) {
    case pd::Errc::invalid_argument: return PD_INVALID_ARGUMENT;
    case pd::Errc::parse_error: return PD_PARSE_ERROR;
    case pd::Errc::precondition: return PD_PRECONDITION;
    case pd::Errc::out_of_range: return PD_OUT_OF_RANGE;
    case pd::Errc::overflow: return PD_OVERFLOW;
    case pd::Errc::internal: return PD_INTERNAL;
    }
    return PD_INTERNAL;
}

pd_status set_error(pd_status s, const std::string& what)
{
    last_error = what;
    return s;
}

template <class Fn>
pd_status run(const pd_options* o, pd_result** out, Fn&& fn)
{
    last_error.clear();
    if (!o || !out) return set_error(PD_INVALID_ARGUMENT, "null options or result pointer");
    try {
        pd::Output r = fn(o->opts);
        *out = new pd_result{std::move(r.text)};
        if (r.status == 0) return PD_OK;
        last_error = "verification failed";
        return PD_VERIFY_FAILED;
    } catch (const pd::Error& e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(PD_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(PD_INTERNAL, e.what());
    }
}

bool valid_text(const char* s) { return s != nullptr; }

}  // namespace

extern "C" {

const char* pd_version(void) { return "1.0.0"; }

const char* pd_status_name(pd_status s)
{
    switch (s) {
    case PD_OK: return "ok";
    case PD_VERIFY_FAILED: return "verification failed";
    case PD_INVALID_ARGUMENT: return "invalid argument";
    case PD_PARSE_ERROR: return "parse error";
    case PD_PRECONDITION: return "precondition violated";
    case PD_OUT_OF_RANGE: return "out of range";
    case PD_OVERFLOW: return "overflow";
    case PD_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pd_last_error(void) { return last_error.c_str(); }

pd_options* pd_options_create(void) { return new (std::nothrow) pd_options{}; }

void pd_options_destroy(pd_options* o) { delete o; }

pd_status pd_options_set_format(pd_options* o, pd_format f)
{
    if (!o) return set_error(PD_INVALID_ARGUMENT, "null options");
    switch (f) {
    case PD_FORMAT_TEXT: o->opts.format = pd::Format::text; return PD_OK;
    case PD_FORMAT_JSON: o->opts.format = pd::Format::json; return PD_OK;
    case PD_FORMAT_LATEX: o->opts.format = pd::Format::latex; return PD_OK;
    }
    return set_error(PD_INVALID_ARGUMENT, "unknown format");
}

pd_status pd_options_set_cap(pd_options* o, int cap)
{
    if (!o) return set_error(PD_INVALID_ARGUMENT, "null options");
    if (cap < 1 || cap > 12) return set_error(PD_OUT_OF_RANGE, "cap must lie in 1..12");
    o->opts.cap = cap;
    return PD_OK;
}

pd_status pd_options_set_jobs(pd_options* o, int jobs)
{
    if (!o) return set_error(PD_INVALID_ARGUMENT, "null options");
    if (jobs < 1 || jobs > 256) return set_error(PD_OUT_OF_RANGE, "jobs must lie in 1..256");
    o->opts.jobs = jobs;
    return PD_OK;
}

const char* pd_result_text(const pd_result* r) { return r ? r->text.c_str() : ""; }

size_t pd_result_size(const pd_result* r) { return r ? r->text.size() : 0; }

void pd_result_destroy(pd_result* r) { delete r; }

pd_status pd_perm_diagonal(const pd_options* o, int n, pd_result** out)
{
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_perm_diagonal(p, n); });
}

pd_status pd_assoc_diagonal(const pd_options* o, int n, pd_assoc_method method, pd_result** out)
{
    const char* name = method == PD_METHOD_PROJECTION ? "projection"
                       : method == PD_METHOD_DIRECT   ? "direct"
                       : method == PD_METHOD_BOTH     ? "both"
                                                      : "";
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_assoc_diagonal(p, n, name); });
}

pd_status pd_multi_diagonal(const pd_options* o, int n, pd_result** out)
{
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_multi_diagonal(p, n); });
}

pd_status pd_boundary(const pd_options* o, const char* partition, pd_result** out)
{
    if (!valid_text(partition)) return set_error(PD_INVALID_ARGUMENT, "null partition");
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_boundary(p, partition); });
}

pd_status pd_configs(const pd_options* o, int n, int count_only, pd_result** out)
{
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_configs(p, n, count_only != 0); });
}

pd_status pd_faceword(const pd_options* o, const char* partition, pd_result** out)
{
    if (!valid_text(partition)) return set_error(PD_INVALID_ARGUMENT, "null partition");
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_faceword(p, partition); });
}

pd_status pd_tonks_classes(const pd_options* o, int n, pd_result** out)
{
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_tonks_classes(p, n); });
}

pd_status pd_relations(const pd_options* o, const char* partition, pd_result** out)
{
    if (!valid_text(partition)) return set_error(PD_INVALID_ARGUMENT, "null partition");
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_relations(p, partition); });
}

pd_status pd_qcheck(const pd_options* o, const char* ab, const char* cd, pd_result** out)
{
    if (!valid_text(ab) || !valid_text(cd)) return set_error(PD_INVALID_ARGUMENT, "null partition");
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_qcheck(p, ab, cd); });
}

pd_status pd_tensor_ops(const pd_options* o, int n, pd_variance v, pd_sign_rule rule, pd_result** out)
{
    if (v != PD_ALGEBRA && v != PD_COALGEBRA) return set_error(PD_INVALID_ARGUMENT, "unknown variance");
    if (rule != PD_SIGNS_LITERAL && rule != PD_SIGNS_COHERENT) return set_error(PD_INVALID_ARGUMENT, "unknown sign rule");
    const pd::Variance var = v == PD_ALGEBRA ? pd::Variance::algebra : pd::Variance::coalgebra;
    const pd::SignRule r = rule == PD_SIGNS_LITERAL ? pd::SignRule::literal : pd::SignRule::coherent;
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_tensor_ops(p, n, var, r); });
}

pd_status pd_verify(const pd_options* o, int max_n, int strict, const char* filter, pd_result** out)
{
    const std::string f = filter ? filter : "";
    return run(o, out, [&](const pd::Options& p) { return pd::cmd_verify(p, max_n, strict != 0, f); });
}

}  // extern "C"
