// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "scissors/assembler.hpp"
#include "scissors/budget.hpp"
#include "scissors/category.hpp"
#include "scissors/constructions.hpp"
#include "scissors/document.hpp"
#include "scissors/errors.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/k0.hpp"
#include "scissors/morphism.hpp"
#include "scissors/nerve.hpp"
#include "scissors/simplicial.hpp"
#include "scissors/sink.hpp"
#include "scissors/smith.hpp"
#include "scissors/wcategory.hpp"
