// bundle
var v0 = 917362213;
var v1 = 498246866;
var v2 = 313546540;
var v3 = 143455128;
var v4 = 232288161;
var v5 = 62010156;
var v6 = 798913692;
var v7 = 683936336;
var v8 = 165435356;
var v9 = 355550377;
var v10 = 217437834;
var v11 = 162053357;
var v12 = 1018316577;
var v13 = 1024647812;
var v14 = 439046353;
var v15 = 953976663;
var v16 = 956480190;
var v17 = 211877487;
var v18 = 363954739;
var v19 = 564915891;
var v20 = 13822647;
var v21 = 422439718;
var v22 = 712672755;
var v23 = 1063709998;
var v24 = 249703745;
var v25 = 394333171;
var v26 = 543767632;
var v27 = 606402074;
var v28 = 514152973;
var v29 = 931041620;
var v30 = 47873995;
var v31 = 103382675;
var v32 = 975367857;
var v33 = 743183155;
var v34 = 1002392103;
var v35 = 379237989;
var v36 = 1044648635;
var v37 = 1031727368;
var v38 = 896054848;
var v39 = 250735916;
var v40 = 286087563;
var v41 = 548416879;
var v42 = 646009699;
var v43 = 423561866;
var v44 = 224182528;
var v45 = 36141155;
var v46 = 459235908;
var v47 = 1044446070;
var v48 = 764049658;
var v49 = 232951948;
var v50 = 99047914;
var v51 = 881279485;
var v52 = 811629430;
var v53 = 56326582;
var v54 = 315223045;
var v55 = 671447191;
var v56 = 908940662;
var v57 = 849055153;
var v58 = 437041339;
var v59 = 224125666;
var v60 = 841821668;
var v61 = 1046195986;
var v62 = 109328730;
var v63 = 950960197;
var v64 = 478385343;
var v65 = 533650258;
var v66 = 601092769;
var v67 = 641293344;
var v68 = 803535945;
var v69 = 339733449;
var v70 = 678927206;
var v71 = 665894307;
var v72 = 828597695;
var v73 = 571028812;
var v74 = 26966156;
var v75 = 568914779;
var v76 = 920084623;
var v77 = 323292978;
var v78 = 486503783;
var v79 = 241184256;
var v80 = 1030454539;
var v81 = 621109799;
var v82 = 154873882;
var v83 = 391492118;
var v84 = 981636730;
var v85 = 227766327;
var v86 = 138137746;
var v87 = 477933360;
var v88 = 524692385;
var v89 = 932790716;
var v90 = 246896985;
var v91 = 640646339;
var v92 = 960880386;
var v93 = 164771195;
var v94 = 18861853;
var v95 = 88778807;
var v96 = 166403249;
var v97 = 219524431;
var v98 = 122518995;
var v99 = 444700833;
var v100 = 753055716;
var v101 = 415996412;
var v102 = 885769047;
var v103 = 27636259;
var v104 = 823046459;
var v105 = 204663058;
var v106 = 203688791;
var v107 = 990573353;
var v108 = 317525551;
var v109 = 295878388;
var v110 = 542859387;
var v111 = 651813028;
var v112 = 760187851;
var v113 = 221443813;
var v114 = 564137081;
var v115 = 1061704127;
var v116 = 363791109;
var v117 = 320345061;
var v118 = 630068065;
var v119 = 791509682;
var v120 = 476636734;
var v121 = 151275487;
var v122 = 836621070;
var v123 = 163553401;
var v124 = 872657818;
var v125 = 987117514;
var v126 = 160898993;
var v127 = 165428299;
var v128 = 416030205;
var v129 = 599533011;
var v130 = 258208991;
var v131 = 371644564;
var v132 = 560955053;
var v133 = 943769118;
var v134 = 357214625;
var v135 = 91927337;
var v136 = 29155215;
var v137 = 784257569;
var v138 = 545879163;
var v139 = 60706754;
var v140 = 449668920;
var v141 = 247907806;
var v142 = 1064212124;
var v143 = 1032972737;
var v144 = 841544235;
var v145 = 717657210;
var v146 = 950623778;
var v147 = 234094130;
var v148 = 201574624;
var v149 = 272879052;
var v150 = 524164841;
var v151 = 713758877;
var v152 = 466658047;
var v153 = 1048126414;
var v154 = 452145992;
var v155 = 164865414;
var v156 = 562028972;
var v157 = 295519618;
var v158 = 180405089;
var v159 = 783278680;
var v160 = 3387179;
var v161 = 108174240;
var v162 = 208538820;
var v163 = 262841846;
var v164 = 305103540;
var v165 = 695421000;
var v166 = 688067592;
var v167 = 741673458;
var v168 = 70921200;
var v169 = 471808500;
var v170 = 870916639;
var v171 = 678375989;
var v172 = 699270556;
var v173 = 488361542;
var v174 = 1037451400;
var v175 = 783063971;
var v176 = 880526428;
var v177 = 811001430;
var v178 = 186708032;
var v179 = 583138428;
var v180 = 586718641;
var v181 = 209126612;
var v182 = 477528969;
var v183 = 708812363;
var v184 = 684899601;
var v185 = 81900361;
var v186 = 767472287;
var v187 = 642564856;
var v188 = 54205516;
var v189 = 414190440;
var v190 = 403602855;
var v191 = 148860867;
var v192 = 579882306;
var v193 = 88168662;
var v194 = 642223138;
var v195 = 55546338;
var v196 = 685659769;
var v197 = 946842032;
var v198 = 962292644;
var v199 = 477505781;
var v200 = 1045174464;
var v201 = 410410326;
var v202 = 37408385;
var v203 = 490275705;
var v204 = 663983991;
var v205 = 255181977;
var v206 = 170819302;
var v207 = 654664395;
var v208 = 959216821;
var v209 = 753197985;
var v210 = 9835158;
var v211 = 188121699;
var v212 = 34275286;
var v213 = 154771162;
var v214 = 570018488;
var v215 = 636589657;
var v216 = 895553951;
var v217 = 586526327;
var v218 = 70281793;
var v219 = 319527842;
var v220 = 973304645;
var v221 = 589849911;
var v222 = 734982288;
var v223 = 330976770;
var v224 = 882172695;
var v225 = 485934958;
var v226 = 461604179;
var v227 = 545708171;
var v228 = 618580079;
var v229 = 213337649;
var v230 = 1028521669;
var v231 = 199505746;
var v232 = 725942481;
var v233 = 720907995;
var v234 = 983555989;
var v235 = 37786644;
var v236 = 53565244;
var v237 = 954716390;
var v238 = 44156120;
var v239 = 707476853;
var v240 = 729788333;
var v241 = 224625120;
var v242 = 1072661104;
var v243 = 618174857;
var v244 = 329721590;
var v245 = 904680065;
var v246 = 1046257165;
var v247 = 765983254;
var v248 = 1028272075;
var v249 = 975341176;
var v250 = 575694072;
var v251 = 941423532;
var v252 = 631217948;
var v253 = 576691641;
var v254 = 1023274756;
var v255 = 657932778;
var v256 = 965544180;
var v257 = 784846383;
var v258 = 7945913;
var v259 = 461487638;
var v260 = 294785526;
var v261 = 264418488;
var v262 = 924067037;
var v263 = 492007450;
var v264 = 702235000;
var v265 = 177439258;
var v266 = 73309503;
var v267 = 438417584;
var v268 = 718247820;
var v269 = 964570607;
var v270 = 287116787;
var v271 = 557025393;
var v272 = 959174866;
var v273 = 280806284;
var v274 = 632623841;
var v275 = 520109708;
var v276 = 1058944031;
var v277 = 214098801;
var v278 = 883810874;
var v279 = 476331263;
var v280 = 925479500;
var v281 = 528968041;
var v282 = 675398992;
var v283 = 201929910;
var v284 = 764451884;
var v285 = 75530968;
var v286 = 136669735;
var v287 = 104532398;
var v288 = 685271506;
var v289 = 285498738;
var v290 = 309152959;
var v291 = 439557005;
var v292 = 1027922043;
var v293 = 808387100;
var v294 = 438796237;
var v295 = 512407727;
var v296 = 220769554;
var v297 = 533060229;
var v298 = 864531385;
var v299 = 757220828;
var v300 = 350443300;
var v301 = 60430470;
var v302 = 787706593;
var v303 = 284433668;
var v304 = 897912722;
var v305 = 812617298;
var v306 = 351967752;
var v307 = 358991192;
var v308 = 829596334;
var v309 = 278119473;
var v310 = 83457578;
var v311 = 931293750;
var v312 = 734657528;
var v313 = 198365005;
var v314 = 952230880;
var v315 = 474646765;
var v316 = 299343680;
var v317 = 367052108;
var v318 = 255453050;
var v319 = 955289571;
var v320 = 738216296;
var v321 = 1056985099;
var v322 = 647856084;
var v323 = 318647021;
var v324 = 532483999;
var v325 = 179512976;
var v326 = 553210689;
var v327 = 1040078124;
var v328 = 499543457;
var v329 = 536580318;
var v330 = 584748518;
var v331 = 390830107;
var v332 = 178202016;
var v333 = 882121184;
var v334 = 393890261;
var v335 = 523711054;
var v336 = 52371597;
var v337 = 124092396;
var v338 = 839332829;
var v339 = 1014549120;
var v340 = 732118783;
var v341 = 843186907;
var v342 = 488420547;
var v343 = 171634604;
var v344 = 1005839028;
var v345 = 554830401;
var v346 = 427963821;
var v347 = 948158614;
var v348 = 657747258;
var v349 = 334746380;
var v350 = 217512299;
var v351 = 987995205;
var v352 = 332918810;
var v353 = 946441485;
var v354 = 482195090;
var v355 = 166554039;
var v356 = 592706628;
var v357 = 511861212;
var v358 = 25935034;
var v359 = 36600700;
var v360 = 551998574;
var v361 = 1022187083;
var v362 = 1013154198;
var v363 = 930674980;
var v364 = 851788994;
var v365 = 93932059;
var v366 = 1043961892;
var v367 = 988208723;
var v368 = 843692024;
var v369 = 327912565;
var v370 = 101236610;
var v371 = 868037478;
var v372 = 145318119;
var v373 = 827840898;
var v374 = 448483819;
var v375 = 375640609;
var v376 = 745554774;
var v377 = 564663907;
var v378 = 663927653;
var v379 = 328029041;
var v380 = 22426014;
var v381 = 34905244;
var v382 = 450706490;
var v383 = 854713350;
