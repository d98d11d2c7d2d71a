// SPDX-License-Identifier: Apache-2.0
//
// planarnf - planar near-field antenna measurement processing toolkit
// Copyright (C) 2026 the planarnf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "planarnf/calibration.hpp"
#include "planarnf/constants.hpp"
#include "planarnf/fields.hpp"
#include "planarnf/geometry.hpp"
#include "planarnf/io.hpp"
#include "planarnf/sources.hpp"
#include "planarnf/synthesis.hpp"
#include "planarnf/transform.hpp"
