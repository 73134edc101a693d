// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include "ils/embedder.hpp"
#include "ils/error.hpp"
#include "ils/lifecycle.hpp"
#include "ils/model.hpp"
#include "ils/parser.hpp"
#include "ils/relations.hpp"
#include "ils/report.hpp"
#include "ils/retriever.hpp"
#include "ils/store.hpp"
