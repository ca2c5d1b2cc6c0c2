#pragma once

#include "fourcycle/colouring.hpp"
#include "fourcycle/construct.hpp"
#include "fourcycle/decompose.hpp"
#include "fourcycle/design.hpp"
#include "fourcycle/io.hpp"
#include "fourcycle/verify.hpp"
