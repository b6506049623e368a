#include "qk/qk.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qk/command.hpp"
#include "qk/error.hpp"
#include "qk/json_io.hpp"

struct qk_context {
  std::string last_error;
  int last_status = QK_STATUS_OK;
};

struct qk_git_data {
  qk::GitData value;
};

struct qk_presentation {
  qk::PresentationPtr value;
};

namespace {

void clear_error(qk_context *ctx) {
  if (!ctx) return;
  ctx->last_error.clear();
  ctx->last_status = QK_STATUS_OK;
}

int record_error(qk_context *ctx, const std::exception &e, int status) {
  if (ctx) {
    ctx->last_error = e.what();
    ctx->last_status = status;
  }
  return status;
}

int status_of(const qk::Error &e) {
  return e.kind() == qk::ErrorKind::invalid_input ? QK_STATUS_INVALID_INPUT
                                                  : QK_STATUS_PRECONDITION;
}

char *copy_string(const std::string &text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename F>
auto guarded(qk_context *ctx, F &&f) -> decltype(f()) {
  clear_error(ctx);
  try {
    return f();
  } catch (const qk::Error &e) {
    record_error(ctx, e, status_of(e));
  } catch (const std::exception &e) {
    record_error(ctx, e, QK_STATUS_INVALID_INPUT);
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char *qk_version_string(void) { return "0.1.0"; }

qk_context *qk_context_create(void) { return new qk_context(); }

void qk_context_destroy(qk_context *ctx) { delete ctx; }

const char *qk_last_error(const qk_context *ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

int qk_last_status(const qk_context *ctx) {
  return ctx ? ctx->last_status : QK_STATUS_INVALID_INPUT;
}

qk_git_data *qk_git_data_parse(qk_context *ctx, const char *json_text) {
  return guarded(ctx, [&]() -> qk_git_data * {
    if (!json_text) qk::throw_invalid("null input document");
    qk::Json document = qk::Json::parse(std::string(json_text), nullptr, false);
    if (document.is_discarded()) qk::throw_invalid("malformed JSON input");
    return new qk_git_data{qk::parse_git_data(document)};
  });
}

void qk_git_data_destroy(qk_git_data *git) { delete git; }

int qk_git_data_rank(const qk_git_data *git) {
  return git ? static_cast<int>(git->value.r()) : 0;
}

int qk_git_data_coordinates(const qk_git_data *git) {
  return git ? static_cast<int>(git->value.k()) : 0;
}

int qk_git_data_is_dm(qk_context *ctx, const qk_git_data *git,
                      int *out_is_dm) {
  clear_error(ctx);
  if (!git || !out_is_dm) {
    qk::Error e(qk::ErrorKind::invalid_input, "null argument");
    return record_error(ctx, e, QK_STATUS_INVALID_INPUT);
  }
  try {
    *out_is_dm = qk::is_dm(git->value) ? 1 : 0;
    return QK_STATUS_OK;
  } catch (const qk::Error &e) {
    return record_error(ctx, e, status_of(e));
  } catch (const std::exception &e) {
    return record_error(ctx, e, QK_STATUS_INVALID_INPUT);
  }
}

qk_presentation *qk_presentation_build(qk_context *ctx,
                                       const qk_git_data *git) {
  return guarded(ctx, [&]() -> qk_presentation * {
    if (!git) qk::throw_invalid("null GIT datum");
    return new qk_presentation{qk::build_presentation(git->value)};
  });
}

void qk_presentation_destroy(qk_presentation *pres) { delete pres; }

char *qk_presentation_to_json(qk_context *ctx, const qk_presentation *pres) {
  return guarded(ctx, [&]() -> char * {
    if (!pres) qk::throw_invalid("null presentation");
    return copy_string(qk::presentation_to_json(*pres->value).dump(2));
  });
}

char *qk_inertia_json(qk_context *ctx, const qk_git_data *git) {
  return guarded(ctx, [&]() -> char * {
    if (!git) qk::throw_invalid("null GIT datum");
    qk::Json out = qk::Json::array();
    for (const auto &sector : qk::enumerate_sectors(git->value)) {
      out.push_back(qk::sector_to_json(sector));
    }
    return copy_string(out.dump(2));
  });
}

char *qk_run_request(qk_context *ctx, const char *request_json) {
  clear_error(ctx);
  if (!request_json) {
    qk::Error e(qk::ErrorKind::invalid_input, "null request");
    record_error(ctx, e, QK_STATUS_INVALID_INPUT);
    return nullptr;
  }
  qk::CommandResult result = qk::run_request_json(request_json);
  if (ctx) {
    ctx->last_status = result.status;
    if (result.status != QK_STATUS_OK &&
        result.output.contains("error")) {
      ctx->last_error = result.output["error"]["message"].get<std::string>();
    }
  }
  return copy_string(result.rendered);
}

void qk_string_free(char *text) { std::free(text); }

}  // extern "C"
