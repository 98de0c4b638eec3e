// Copyright 2026 The airfleet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// SYNTHETIC sample data. Coordinates are approximate town centres chosen to
// give an Ontario-like spread; they are not the locations of any real air
// ambulance base or hospital.

#include "model.hpp"

namespace airfleet {

std::vector<Base> SampleBases() {
  using V = VehicleClass;
  auto heli = [](std::int64_t id, double lat, double lon) {
    return Base{id, V::kHelicopter, kHelicopterSpeedKmh, {lat, lon}};
  };
  auto plane = [](std::int64_t id, double lat, double lon) {
    return Base{id, V::kPlane, kPlaneSpeedKmh, {lat, lon}};
  };
  // Ids 1-4 planes, 5-12 helicopters.
  return {
      plane(1, 48.3809, -89.2477),   // Thunder Bay
      plane(2, 50.1001, -91.9170),   // Sioux Lookout
      plane(3, 48.4758, -81.3305),   // Timmins
      plane(4, 46.4917, -80.9930),   // Sudbury
      heli(5, 43.6532, -79.3832),    // Toronto
      heli(6, 45.4215, -75.6972),    // Ottawa
      heli(7, 42.9849, -81.2453),    // London
      heli(8, 46.4917, -80.9930),    // Sudbury
      heli(9, 48.3809, -89.2477),    // Thunder Bay
      heli(10, 49.7670, -94.4894),   // Kenora
      heli(11, 51.2794, -80.6463),   // Moosonee
      heli(12, 44.3091, -78.3197),   // Peterborough
  };
}

std::vector<GeoPoint> SampleFacilities() {
  return {
      {43.6532, -79.3832},  // Toronto
      {45.4215, -75.6972},  // Ottawa
      {42.9849, -81.2453},  // London
      {43.2557, -79.8711},  // Hamilton
      {44.2312, -76.4860},  // Kingston
      {42.3149, -83.0364},  // Windsor
      {43.4516, -80.4925},  // Kitchener
      {44.3091, -78.3197},  // Peterborough
      {44.3894, -79.6903},  // Barrie
      {44.5690, -80.9406},  // Owen Sound
      {45.0189, -74.7282},  // Cornwall
      {45.3483, -79.2170},  // Huntsville
      {46.3091, -79.4608},  // North Bay
      {46.4917, -80.9930},  // Sudbury
      {46.5219, -84.3461},  // Sault Ste. Marie
      {45.3406, -80.0350},  // Parry Sound
      {46.2499, -82.6437},  // Elliot Lake
      {47.5089, -79.6819},  // New Liskeard
      {48.1465, -80.0350},  // Kirkland Lake
      {48.4758, -81.3305},  // Timmins
      {49.4153, -82.4320},  // Kapuskasing
      {49.6849, -83.6700},  // Hearst
      {51.2794, -80.6463},  // Moosonee
      {52.9280, -82.4230},  // Attawapiskat
      {48.3809, -89.2477},  // Thunder Bay
      {48.7510, -86.3420},  // Marathon
      {49.7880, -92.8320},  // Dryden
      {49.7670, -94.4894},  // Kenora
      {50.1001, -91.9170},  // Sioux Lookout
      {48.6090, -93.3990},  // Fort Frances
      {49.6958, -86.9524},  // Geraldton
      {53.8800, -89.8600},  // Sandy Lake
  };
}

}  // namespace airfleet
