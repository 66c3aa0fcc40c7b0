// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace spindimer {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spindimer
