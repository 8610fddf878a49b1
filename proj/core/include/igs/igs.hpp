#pragma once

#include "igs/disorder.hpp"
#include "igs/dynamics.hpp"
#include "igs/effective.hpp"
#include "igs/errors.hpp"
#include "igs/model.hpp"
#include "igs/spectral.hpp"
#include "igs/version.hpp"
