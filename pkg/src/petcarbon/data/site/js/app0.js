// bundle
var v0 = 557983057;
var v1 = 374839502;
var v2 = 795325667;
var v3 = 890794792;
var v4 = 31748444;
var v5 = 510112582;
var v6 = 72881184;
var v7 = 937315115;
var v8 = 84418585;
var v9 = 678559437;
var v10 = 527682827;
var v11 = 335576665;
var v12 = 437522166;
var v13 = 562559099;
var v14 = 664159364;
var v15 = 526073163;
var v16 = 941262312;
var v17 = 842619172;
var v18 = 1007378913;
var v19 = 187345043;
var v20 = 74202804;
var v21 = 528665358;
var v22 = 515512655;
var v23 = 976998445;
var v24 = 833638815;
var v25 = 264103194;
var v26 = 262873124;
var v27 = 671786251;
var v28 = 147965535;
var v29 = 425976060;
var v30 = 104172900;
var v31 = 566600611;
var v32 = 616428085;
var v33 = 218837204;
var v34 = 504968559;
var v35 = 517329082;
var v36 = 441986586;
var v37 = 144082051;
var v38 = 722308090;
var v39 = 215210194;
var v40 = 636130073;
var v41 = 366559401;
var v42 = 976573420;
var v43 = 927299201;
var v44 = 894524995;
var v45 = 988182723;
var v46 = 803593112;
var v47 = 850833336;
var v48 = 21487119;
var v49 = 931777790;
var v50 = 42182451;
var v51 = 578964938;
var v52 = 588649584;
var v53 = 794538661;
var v54 = 13012337;
var v55 = 873765951;
var v56 = 119785041;
var v57 = 342753193;
var v58 = 112742433;
var v59 = 78975549;
var v60 = 298051564;
var v61 = 372846411;
var v62 = 998166397;
var v63 = 215789235;
var v64 = 17779837;
var v65 = 387433088;
var v66 = 940834232;
var v67 = 219358682;
var v68 = 715141949;
var v69 = 317098550;
var v70 = 466599853;
var v71 = 42202943;
var v72 = 524940500;
var v73 = 759238265;
var v74 = 675644520;
var v75 = 953996546;
var v76 = 713115732;
var v77 = 661953732;
var v78 = 183563040;
var v79 = 1040104373;
var v80 = 458722233;
var v81 = 469150367;
var v82 = 585046030;
var v83 = 943014380;
var v84 = 233700486;
var v85 = 307423685;
var v86 = 247042641;
var v87 = 216726359;
var v88 = 310892361;
var v89 = 805623758;
var v90 = 788317749;
var v91 = 190278819;
var v92 = 466792210;
var v93 = 1013899387;
var v94 = 341397536;
var v95 = 324182897;
var v96 = 503459497;
var v97 = 64577867;
var v98 = 300099851;
var v99 = 885600192;
var v100 = 829939348;
var v101 = 908590496;
var v102 = 588238590;
var v103 = 669037635;
var v104 = 84784226;
var v105 = 449099790;
var v106 = 412643059;
var v107 = 462401101;
var v108 = 1067255163;
var v109 = 880163629;
var v110 = 345631994;
var v111 = 259384041;
var v112 = 540111559;
var v113 = 477711892;
var v114 = 271380011;
var v115 = 624590874;
var v116 = 1004060287;
var v117 = 192415649;
var v118 = 404623669;
var v119 = 855520958;
var v120 = 278925067;
var v121 = 455749555;
var v122 = 692091086;
var v123 = 796782849;
var v124 = 893641392;
var v125 = 625276953;
var v126 = 371087512;
var v127 = 12114431;
var v128 = 103471449;
var v129 = 309179819;
var v130 = 758735597;
var v131 = 219620415;
var v132 = 104541317;
var v133 = 83045569;
var v134 = 37284719;
var v135 = 841701300;
var v136 = 672863501;
var v137 = 590353338;
var v138 = 707900639;
var v139 = 480182122;
var v140 = 986699994;
var v141 = 687978840;
var v142 = 598420171;
var v143 = 64443478;
var v144 = 554281473;
var v145 = 927170953;
var v146 = 749425021;
var v147 = 447944876;
var v148 = 7147060;
var v149 = 974872744;
var v150 = 802870362;
var v151 = 279913288;
var v152 = 559271345;
var v153 = 615288951;
var v154 = 275270568;
var v155 = 361553098;
var v156 = 184390368;
var v157 = 677942494;
var v158 = 397695578;
var v159 = 740450890;
var v160 = 285976723;
var v161 = 973546921;
var v162 = 816915774;
var v163 = 543991768;
var v164 = 619498899;
var v165 = 175670094;
var v166 = 203005650;
var v167 = 499010111;
var v168 = 240110077;
var v169 = 995768621;
var v170 = 233638875;
var v171 = 114789005;
var v172 = 196982615;
var v173 = 559748032;
var v174 = 1011679841;
var v175 = 641091099;
var v176 = 125524947;
var v177 = 943926396;
var v178 = 167619498;
var v179 = 15864030;
var v180 = 791788102;
var v181 = 1068073277;
var v182 = 973691060;
var v183 = 684005569;
var v184 = 445085531;
var v185 = 105156791;
var v186 = 9581351;
var v187 = 321851210;
var v188 = 920635753;
var v189 = 870267828;
var v190 = 520309513;
var v191 = 522122524;
var v192 = 777434937;
var v193 = 266049162;
var v194 = 635098085;
var v195 = 386353132;
var v196 = 12043554;
var v197 = 684636392;
var v198 = 298253887;
var v199 = 780560436;
var v200 = 501519193;
var v201 = 496782533;
var v202 = 648467751;
var v203 = 553629123;
var v204 = 1005754934;
var v205 = 274610545;
var v206 = 299476517;
var v207 = 106527439;
var v208 = 687493741;
var v209 = 74331963;
var v210 = 170632594;
var v211 = 131928995;
var v212 = 789746115;
var v213 = 319251615;
var v214 = 90520531;
var v215 = 621970769;
var v216 = 679079523;
var v217 = 141978920;
var v218 = 780469179;
var v219 = 909984789;
var v220 = 608667932;
var v221 = 150640482;
var v222 = 1007487617;
var v223 = 335890534;
var v224 = 905009613;
var v225 = 438325625;
var v226 = 1001069812;
var v227 = 505792350;
var v228 = 1037725006;
var v229 = 193668140;
var v230 = 754357484;
var v231 = 56357097;
var v232 = 1030431691;
var v233 = 1007719563;
var v234 = 971364005;
var v235 = 760036136;
var v236 = 574382939;
var v237 = 532687694;
var v238 = 921784888;
var v239 = 1040848417;
var v240 = 390507887;
var v241 = 242732795;
var v242 = 522223478;
var v243 = 447669294;
var v244 = 15221452;
var v245 = 899095630;
var v246 = 471996901;
var v247 = 472474052;
var v248 = 359450530;
var v249 = 30686624;
var v250 = 606190732;
var v251 = 208848463;
var v252 = 411684196;
var v253 = 520261726;
var v254 = 480823215;
var v255 = 328075719;
var v256 = 943534270;
var v257 = 857269546;
var v258 = 852439581;
var v259 = 760051874;
var v260 = 271760661;
var v261 = 528727343;
var v262 = 160649141;
var v263 = 882477235;
var v264 = 784316660;
var v265 = 356964147;
var v266 = 127975722;
var v267 = 462170450;
var v268 = 485864778;
var v269 = 805034425;
var v270 = 472566942;
var v271 = 79740497;
var v272 = 249816914;
var v273 = 454769944;
var v274 = 599934372;
var v275 = 467128772;
var v276 = 492979308;
var v277 = 411390341;
var v278 = 195000052;
var v279 = 233005321;
var v280 = 273655603;
var v281 = 164017548;
var v282 = 16280174;
var v283 = 311376603;
var v284 = 552946945;
var v285 = 788384798;
var v286 = 257862581;
var v287 = 44512705;
var v288 = 582599886;
var v289 = 63914290;
var v290 = 323833303;
var v291 = 888623035;
var v292 = 116651089;
var v293 = 210819423;
var v294 = 286468331;
var v295 = 74894919;
var v296 = 965832985;
var v297 = 459720738;
var v298 = 261735483;
var v299 = 598549650;
var v300 = 352488030;
var v301 = 353000070;
var v302 = 750369848;
var v303 = 745256677;
var v304 = 388215080;
var v305 = 228256208;
var v306 = 530979160;
var v307 = 761118764;
var v308 = 474880009;
var v309 = 536631603;
var v310 = 714247016;
var v311 = 74795195;
var v312 = 280743806;
var v313 = 918596339;
var v314 = 509362535;
var v315 = 485201798;
var v316 = 861789943;
var v317 = 250355361;
var v318 = 248010508;
var v319 = 1000873303;
var v320 = 880392997;
var v321 = 1059919461;
var v322 = 943468371;
var v323 = 1032207091;
var v324 = 10995663;
var v325 = 529589546;
var v326 = 146184897;
var v327 = 602497600;
var v328 = 394593040;
var v329 = 481006850;
var v330 = 907874863;
var v331 = 1009328002;
var v332 = 532537196;
var v333 = 671446980;
var v334 = 733516749;
var v335 = 40611694;
var v336 = 710119685;
var v337 = 992927706;
var v338 = 183299679;
var v339 = 353553828;
var v340 = 578819404;
var v341 = 411468802;
var v342 = 65077439;
var v343 = 1065726999;
var v344 = 787549287;
var v345 = 493427621;
var v346 = 272827665;
var v347 = 1043112406;
var v348 = 504314208;
var v349 = 1014116210;
var v350 = 193569647;
var v351 = 32787635;
var v352 = 893356184;
var v353 = 113078886;
var v354 = 22564411;
var v355 = 302664569;
var v356 = 548347584;
var v357 = 793237781;
var v358 = 100096369;
var v359 = 366570824;
var v360 = 1060553703;
var v361 = 339390063;
var v362 = 904574926;
var v363 = 663008758;
var v364 = 125787842;
var v365 = 185058167;
var v366 = 876188926;
var v367 = 427776782;
var v368 = 612580719;
var v369 = 963764021;
var v370 = 498323879;
var v371 = 334618644;
var v372 = 932726712;
var v373 = 508801167;
var v374 = 970634988;
var v375 = 604654040;
var v376 = 188671791;
var v377 = 785592656;
var v378 = 121589722;
var v379 = 45318506;
var v380 = 331947404;
var v381 = 846252873;
var v382 = 501937076;
var v383 = 78505014;
var v384 = 514246308;
var v385 = 833413905;
var v386 = 859442536;
var v387 = 184287246;
var v388 = 68933014;
var v389 = 569897169;
var v390 = 734480133;
var v391 = 140859956;
var v392 = 45818805;
var v393 = 726576003;
var v394 = 304233138;
var v395 = 1036626518;
var v396 = 263686690;
var v397 = 281493278;
var v398 = 909744926;
var v399 = 196803739;
var v400 = 392882408;
var v401 = 344759866;
var v402 = 754393178;
var v403 = 704736346;
var v404 = 395980237;
var v405 = 924369647;
var v406 = 393549328;
var v407 = 351085735;
var v408 = 943076167;
var v409 = 916993301;
var v410 = 60325225;
var v411 = 347960652;
var v412 = 95774904;
var v413 = 301164905;
var v414 = 959552345;
var v415 = 772675621;
var v416 = 391159133;
var v417 = 666679251;
var v418 = 934185148;
var v419 = 63727137;
var v420 = 747677078;
var v421 = 999242234;
var v422 = 101930584;
var v423 = 531676826;
var v424 = 722718242;
var v425 = 850685444;
var v426 = 604312140;
var v427 = 484963716;
var v428 = 841146183;
var v429 = 995647244;
var v430 = 806749952;
var v431 = 90993059;
var v432 = 177738012;
var v433 = 1052886823;
var v434 = 358859496;
var v435 = 238584065;
var v436 = 141218332;
var v437 = 841382819;
var v438 = 203908198;
var v439 = 787991385;
var v440 = 980460401;
var v441 = 979286286;
var v442 = 343141008;
var v443 = 812421131;
var v444 = 997713780;
var v445 = 503121886;
var v446 = 992951836;
var v447 = 712287886;
var v448 = 378174592;
var v449 = 811666095;
var v450 = 937813671;
var v451 = 465145090;
var v452 = 173736894;
var v453 = 938693479;
var v454 = 242507339;
var v455 = 241287488;
var v456 = 387092066;
var v457 = 47090558;
var v458 = 466887967;
var v459 = 632057213;
var v460 = 946649960;
var v461 = 796996167;
var v462 = 135133644;
var v463 = 254550450;
var v464 = 116682340;
var v465 = 489880648;
var v466 = 982401747;
var v467 = 587289529;
var v468 = 999879837;
var v469 = 211027970;
var v470 = 360376302;
var v471 = 648539199;
var v472 = 602743712;
var v473 = 761686267;
var v474 = 846763754;
var v475 = 743771467;
var v476 = 104165205;
var v477 = 1025778554;
var v478 = 234098399;
var v479 = 731470268;
var v480 = 914701920;
var v481 = 565119389;
var v482 = 625577284;
var v483 = 381424807;
var v484 = 60196162;
var v485 = 301757289;
var v486 = 665212244;
var v487 = 727244696;
var v488 = 1036228679;
var v489 = 114326672;
var v490 = 98454829;
var v491 = 219826287;
var v492 = 796875813;
var v493 = 2873651;
var v494 = 717647828;
var v495 = 300237667;
var v496 = 129057420;
var v497 = 1052951871;
var v498 = 1034007244;
var v499 = 963728803;
var v500 = 996028585;
var v501 = 749400965;
var v502 = 699344391;
var v503 = 229849702;
var v504 = 748693602;
var v505 = 837884452;
var v506 = 880580810;
var v507 = 815405406;
var v508 = 650720885;
var v509 = 126629420;
var v510 = 543852681;
var v511 = 414349163;
var v512 = 902550750;
var v513 = 398873400;
var v514 = 574880192;
var v515 = 268764261;
var v516 = 215889285;
var v517 = 739555588;
var v518 = 884833280;
var v519 = 614528393;
var v520 = 237161603;
var v521 = 1013501038;
var v522 = 294507664;
var v523 = 540410060;
var v524 = 238961485;
var v525 = 445836680;
var v526 = 317546504;
var v527 = 792998832;
var v528 = 256072782;
var v529 = 265676343;
var v530 = 183900617;
var v531 = 447254336;
var v532 = 684120426;
var v533 = 251470703;
var v534 = 759005323;
var v535 = 253210692;
var v536 = 1059001548;
var v537 = 703572152;
var v538 = 284023254;
var v539 = 896968226;
var v540 = 161439214;
var v541 = 872976287;
var v542 = 340573482;
var v543 = 722615154;
var v544 = 176167523;
var v545 = 806779181;
var v546 = 387955799;
var v547 = 988509666;
var v548 = 844324568;
var v549 = 176565144;
var v550 = 964107902;
var v551 = 228459293;
var v552 = 335485968;
var v553 = 761720911;
var v554 = 865687171;
var v555 = 446987569;
var v556 = 880267862;
var v557 = 146688795;
var v558 = 587978935;
var v559 = 34169391;
var v560 = 746128229;
var v561 = 128358344;
var v562 = 379573758;
var v563 = 270565985;
var v564 = 518775479;
var v565 = 814083888;
var v566 = 1013417031;
var v567 = 801698960;
var v568 = 937787816;
var v569 = 1070667723;
var v570 = 1067946821;
var v571 = 845227263;
var v572 = 324121775;
var v573 = 433995410;
var v574 = 132441794;
var v575 = 142273789;
var v576 = 417369237;
var v577 = 437518161;
var v578 = 484138692;
var v579 = 105682273;
var v580 = 1040525332;
var v581 = 376914701;
var v582 = 121620052;
var v583 = 868479872;
var v584 = 705684099;
var v585 = 35564785;
var v586 = 197109301;
var v587 = 704642864;
var v588 = 68631546;
var v589 = 83178054;
var v590 = 1045291002;
var v591 = 265914053;
var v592 = 227482662;
var v593 = 30525986;
var v594 = 764031930;
var v595 = 347057222;
var v596 = 375005783;
var v597 = 642958471;
var v598 = 220348303;
var v599 = 974477600;
var v600 = 778140273;
var v601 = 136733398;
var v602 = 342774098;
var v603 = 459988882;
var v604 = 447168601;
var v605 = 172654835;
var v606 = 532753662;
var v607 = 22486217;
var v608 = 325354463;
var v609 = 534078848;
var v610 = 810771595;
var v611 = 26993704;
var v612 = 207478246;
var v613 = 292395377;
var v614 = 644733825;
var v615 = 776701084;
var v616 = 563171598;
var v617 = 823128557;
var v618 = 903511848;
var v619 = 1065580977;
var v620 = 701394241;
var v621 = 670548912;
var v622 = 537544505;
var v623 = 504112244;
var v624 = 841104908;
var v625 = 675551592;
var v626 = 773209213;
var v627 = 1034247178;
var v628 = 428974957;
var v629 = 326662531;
var v630 = 288865404;
var v631 = 1028646327;
var v632 = 1029121581;
var v633 = 881417081;
var v634 = 281948360;
var v635 = 962160237;
var v636 = 176902052;
var v637 = 83838903;
var v638 = 497241694;
var v639 = 830521995;
var v640 = 19197463;
var v641 = 791779633;
var v642 = 691731945;
var v643 = 918568268;
var v644 = 805961936;
var v645 = 746451412;
var v646 = 580026449;
var v647 = 1025027792;
var v648 = 203465223;
var v649 = 465905419;
var v650 = 907865334;
var v651 = 487956718;
var v652 = 433178387;
var v653 = 627985147;
var v654 = 528084956;
var v655 = 1010803254;
var v656 = 98566235;
var v657 = 37276791;
var v658 = 1004304340;
var v659 = 459592132;
var v660 = 742234282;
var v661 = 283215133;
var v662 = 25042551;
var v663 = 1060938638;
var v664 = 356060910;
var v665 = 1044459140;
var v666 = 472341637;
var v667 = 454122803;
var v668 = 177477381;
var v669 = 124202142;
var v670 = 849123915;
var v671 = 454567349;
var v672 = 723438896;
var v673 = 763982774;
var v674 = 809061282;
var v675 = 28485316;
var v676 = 671787020;
var v677 = 915127004;
var v678 = 140151218;
var v679 = 210716285;
var v680 = 436150601;
var v681 = 988601313;
var v682 = 753800479;
var v683 = 815541049;
var v684 = 224134341;
var v685 = 224205589;
var v686 = 890251094;
var v687 = 924344392;
var v688 = 30495261;
var v689 = 62417232;
var v690 = 202141449;
var v691 = 441218063;
var v692 = 771633014;
var v693 = 875362115;
var v694 = 544514164;
var v695 = 86734864;
var v696 = 709899160;
var v697 = 548304835;
var v698 = 310911813;
var v699 = 387950041;
var v700 = 831130338;
var v701 = 674512001;
var v702 = 422637156;
var v703 = 562254627;
var v704 = 202221665;
var v705 = 341114076;
var v706 = 570897723;
var v707 = 1038929244;
var v708 = 509690291;
var v709 = 113523176;
var v710 = 621292636;
var v711 = 1001690588;
var v712 = 125671254;
var v713 = 508992413;
var v714 = 197067212;
var v715 = 416113253;
var v716 = 315161844;
var v717 = 73729863;
var v718 = 132853302;
var v719 = 194108042;
var v720 = 740978666;
var v721 = 633325338;
var v722 = 399816520;
var v723 = 1038268909;
var v724 = 901878964;
var v725 = 313186044;
var v726 = 271032064;
var v727 = 873344637;
var v728 = 365227671;
var v729 = 957693862;
var v730 = 28891715;
var v731 = 664913202;
var v732 = 382898651;
var v733 = 436078924;
var v734 = 987421403;
var v735 = 95043824;
var v736 = 45040168;
var v737 = 749824507;
var v738 = 45812440;
var v739 = 873325135;
var v740 = 906490326;
var v741 = 977306961;
var v742 = 130632591;
var v743 = 34048341;
var v744 = 168601019;
var v745 = 1048983543;
var v746 = 190304976;
var v747 = 1015260534;
var v748 = 478856003;
var v749 = 444497494;
var v750 = 624558577;
var v751 = 1026851224;
var v752 = 292530623;
var v753 = 838129062;
var v754 = 905671095;
var v755 = 380432282;
var v756 = 135896308;
var v757 = 733431665;
var v758 = 1014525478;
var v759 = 925202312;
var v760 = 999466751;
var v761 = 698185152;
var v762 = 787810134;
var v763 = 180023414;
var v764 = 139875804;
var v765 = 541741243;
var v766 = 145741972;
var v767 = 483210906;
var v768 = 852374344;
var v769 = 620199590;
var v770 = 437468178;
var v771 = 830531884;
var v772 = 398006094;
var v773 = 338146400;
var v774 = 579808000;
var v775 = 826689458;
var v776 = 188471758;
var v777 = 190538521;
var v778 = 745870208;
var v779 = 747255498;
var v780 = 283719021;
var v781 = 999145978;
var v782 = 684919842;
var v783 = 913235040;
var v784 = 285898755;
var v785 = 52216454;
var v786 = 549762526;
var v787 = 9927470;
var v788 = 358626417;
var v789 = 1002296924;
var v790 = 24279591;
var v791 = 32943040;
var v792 = 911030690;
var v793 = 843070502;
var v794 = 212668300;
var v795 = 362780227;
var v796 = 894016372;
var v797 = 652734013;
var v798 = 596220253;
var v799 = 545943630;
var v800 = 35440285;
var v801 = 868852570;
var v802 = 975309882;
var v803 = 1010894674;
var v804 = 173881345;
var v805 = 190662499;
var v806 = 559932812;
var v807 = 467848071;
var v808 = 381758623;
var v809 = 72740956;
var v810 = 584391897;
var v811 = 970254977;
var v812 = 504249946;
var v813 = 43296679;
var v814 = 1032422665;
var v815 = 116928953;
var v816 = 712628301;
var v817 = 161058417;
var v818 = 769199731;
var v819 = 642727884;
var v820 = 363637182;
var v821 = 350254273;
var v822 = 23934747;
var v823 = 920630353;
var v824 = 564115862;
var v825 = 187343131;
var v826 = 257523641;
var v827 = 892534778;
var v828 = 765258201;
var v829 = 946161335;
var v830 = 340908650;
var v831 = 976932472;
var v832 = 477075667;
var v833 = 327177778;
var v834 = 576029864;
var v835 = 192526896;
var v836 = 717325456;
var v837 = 800688509;
var v838 = 970251814;
var v839 = 391474636;
var v840 = 403538439;
var v841 = 641449871;
var v842 = 175887519;
var v843 = 975524234;
var v844 = 496521085;
var v845 = 803331173;
var v846 = 220792632;
var v847 = 170579004;
var v848 = 451234966;
var v849 = 482886185;
var v850 = 915646227;
var v851 = 457002892;
var v852 = 207526461;
var v853 = 831161059;
var v854 = 1037747062;
var v855 = 1027097343;
var v856 = 991316169;
var v857 = 523957466;
var v858 = 283192975;
var v859 = 591910474;
var v860 = 286175214;
var v861 = 370287714;
var v862 = 182652298;
var v863 = 195025183;
var v864 = 637990674;
var v865 = 724869633;
var v866 = 195715261;
var v867 = 468708696;
var v868 = 67716601;
var v869 = 77248716;
var v870 = 461554524;
var v871 = 864152776;
var v872 = 733521919;
var v873 = 394977537;
var v874 = 838557563;
var v875 = 565213054;
var v876 = 32183830;
var v877 = 17793579;
var v878 = 233205925;
var v879 = 685892229;
var v880 = 620506842;
var v881 = 711357504;
var v882 = 271258291;
var v883 = 641784095;
var v884 = 728692978;
var v885 = 192231940;
var v886 = 751082652;
var v887 = 316651939;
var v888 = 665358286;
var v889 = 433309660;
var v890 = 816418151;
var v891 = 732824581;
var v892 = 940911274;
var v893 = 900212168;
var v894 = 499216574;
var v895 = 120481254;
var v896 = 198819293;
var v897 = 181563022;
var v898 = 222098542;
var v899 = 654665106;
var v900 = 304174578;
var v901 = 948286594;
var v902 = 553611170;
var v903 = 723992908;
var v904 = 175248303;
var v905 = 552723454;
var v906 = 903405044;
var v907 = 535784968;
var v908 = 980031744;
var v909 = 468190614;
var v910 = 786752256;
var v911 = 783900355;
var v912 = 461240156;
var v913 = 709302463;
var v914 = 68600291;
var v915 = 179171399;
var v916 = 567734419;
var v917 = 956745965;
var v918 = 842356957;
var v919 = 687266495;
var v920 = 628354014;
var v921 = 617429654;
var v922 = 504075679;
var v923 = 968953601;
var v924 = 611291530;
var v925 = 25352986;
var v926 = 924126719;
var v927 = 569696874;
var v928 = 335090247;
var v929 = 111023095;
var v930 = 395418397;
var v931 = 718952314;
var v932 = 891388043;
var v933 = 578128178;
var v934 = 3390230;
var v935 = 265039015;
var v936 = 637476383;
var v937 = 246828894;
var v938 = 496759667;
var v939 = 1067433574;
var v940 = 478291653;
var v941 = 1009768915;
var v942 = 390928739;
var v943 = 921994570;
var v944 = 123206711;
var v945 = 105062172;
var v946 = 904273738;
var v947 = 685287934;
var v948 = 43894510;
var v949 = 982596097;
var v950 = 202974655;
var v951 = 18331945;
var v952 = 968609349;
var v953 = 802391291;
var v954 = 64313472;
var v955 = 876216589;
var v956 = 344128298;
var v957 = 870409601;
var v958 = 1004866583;
var v959 = 603825404;
var v960 = 848910289;
var v961 = 512231239;
var v962 = 43070155;
var v963 = 276511517;
var v964 = 830007724;
var v965 = 65267532;
var v966 = 160606953;
var v967 = 782481776;
var v968 = 940433231;
var v969 = 174852000;
var v970 = 609905597;
var v971 = 378892143;
var v972 = 188090654;
var v973 = 85065668;
var v974 = 638899279;
var v975 = 281495220;
var v976 = 559156317;
var v977 = 292707137;
var v978 = 655988594;
var v979 = 813398316;
var v980 = 1053111410;
var v981 = 1022455539;
var v982 = 678168988;
var v983 = 55517516;
var v984 = 166387410;
var v985 = 748582495;
var v986 = 69806939;
var v987 = 441912066;
var v988 = 489906373;
var v989 = 407532255;
var v990 = 415824473;
var v991 = 116041557;
var v992 = 131814686;
var v993 = 90305782;
var v994 = 925163647;
var v995 = 675211773;
var v996 = 1069507678;
var v997 = 1006757007;
var v998 = 478504932;
var v999 = 41017266;
var v1000 = 508213440;
var v1001 = 1068625490;
var v1002 = 999266244;
var v1003 = 689874035;
var v1004 = 630686145;
var v1005 = 687530334;
var v1006 = 663941491;
var v1007 = 974584092;
var v1008 = 888708948;
var v1009 = 725603593;
var v1010 = 1001944843;
var v1011 = 1043094918;
var v1012 = 713639896;
var v1013 = 444392749;
var v1014 = 810436525;
var v1015 = 459331192;
var v1016 = 700694929;
var v1017 = 86305256;
var v1018 = 203545247;
var v1019 = 969750801;
var v1020 = 773109779;
var v1021 = 619793572;
var v1022 = 354808426;
var v1023 = 767139937;
var v1024 = 443185927;
var v1025 = 635706635;
var v1026 = 104082234;
var v1027 = 148961963;
var v1028 = 363311891;
var v1029 = 1069091070;
var v1030 = 618655902;
var v1031 = 668992845;
var v1032 = 361792218;
var v1033 = 967785714;
var v1034 = 900864960;
var v1035 = 749476776;
var v1036 = 812738846;
var v1037 = 197387736;
var v1038 = 455219299;
var v1039 = 863430173;
var v1040 = 319463149;
var v1041 = 732322900;
var v1042 = 637825467;
var v1043 = 685629729;
var v1044 = 954665467;
var v1045 = 524312083;
var v1046 = 321265224;
var v1047 = 143390269;
var v1048 = 658059269;
var v1049 = 195551037;
var v1050 = 983161297;
var v1051 = 129633636;
var v1052 = 877894301;
var v1053 = 822750682;
var v1054 = 964334155;
var v1055 = 962712893;
var v1056 = 679729320;
var v1057 = 499408536;
var v1058 = 886208507;
var v1059 = 573997379;
var v1060 = 752735116;
var v1061 = 176610165;
var v1062 = 81543139;
var v1063 = 533749276;
var v1064 = 172906261;
var v1065 = 197030141;
var v1066 = 527634345;
var v1067 = 310280878;
var v1068 = 830305924;
var v1069 = 202691525;
var v1070 = 445479712;
var v1071 = 343923599;
var v1072 = 310922987;
var v1073 = 341608805;
var v1074 = 917394499;
var v1075 = 63346600;
var v1076 = 557624393;
var v1077 = 7062582;
var v1078 = 248942326;
var v1079 = 858283821;
var v1080 = 512996830;
var v1081 = 338770370;
var v1082 = 143780242;
var v1083 = 19890523;
var v1084 = 574929397;
var v1085 = 73655681;
var v1086 = 406050508;
var v1087 = 742914512;
var v1088 = 393550137;
var v1089 = 978946643;
var v1090 = 442457470;
var v1091 = 156788306;
var v1092 = 79860025;
var v1093 = 520437851;
var v1094 = 217307093;
var v1095 = 8442730;
var v1096 = 638192616;
var v1097 = 304092039;
var v1098 = 993744276;
var v1099 = 74593985;
var v1100 = 619598041;
var v1101 = 934946269;
var v1102 = 1644542;
var v1103 = 392138042;
var v1104 = 25984728;
var v1105 = 735179219;
var v1106 = 368321114;
var v1107 = 143809939;
var v1108 = 180742030;
var v1109 = 213872212;
var v1110 = 928423546;
var v1111 = 59094921;
var v1112 = 1003818216;
var v1113 = 230691768;
var v1114 = 896631904;
var v1115 = 189706223;
var v1116 = 730131474;
var v1117 = 321942330;
var v1118 = 924767387;
var v1119 = 975266890;
var v1120 = 625143395;
var v1121 = 640475162;
var v1122 = 31571694;
var v1123 = 970568355;
var v1124 = 90915381;
var v1125 = 376856366;
var v1126 = 923567206;
var v1127 = 361330457;
var v1128 = 1052299504;
var v1129 = 1068038441;
var v1130 = 934637442;
var v1131 = 919200870;
var v1132 = 636890841;
var v1133 = 742065707;
var v1134 = 790680471;
var v1135 = 201187640;
var v1136 = 629558077;
var v1137 = 546831780;
var v1138 = 770417621;
var v1139 = 745137112;
var v1140 = 303201697;
var v1141 = 1020814280;
var v1142 = 353362463;
var v1143 = 925919255;
var v1144 = 979904787;
var v1145 = 242717314;
var v1146 = 937177921;
var v1147 = 693747505;
var v1148 = 968531660;
var v1149 = 367351187;
var v1150 = 88562318;
var v1151 = 856652833;
var v1152 = 319236374;
var v1153 = 476521438;
var v1154 = 218656574;
var v1155 = 933218526;
var v1156 = 632928168;
var v1157 = 25774764;
var v1158 = 141370052;
var v1159 = 963770508;
var v1160 = 257415756;
var v1161 = 451185992;
var v1162 = 422336813;
var v1163 = 601503401;
var v1164 = 705242273;
var v1165 = 888265352;
var v1166 = 968000442;
var v1167 = 243480843;
var v1168 = 512735163;
var v1169 = 440607807;
var v1170 = 707980553;
var v1171 = 596123138;
var v1172 = 876787369;
var v1173 = 19215887;
var v1174 = 357880894;
var v1175 = 357473759;
var v1176 = 800604559;
var v1177 = 729023310;
var v1178 = 1012012532;
var v1179 = 50261994;
var v1180 = 227131155;
var v1181 = 697475805;
var v1182 = 84876086;
var v1183 = 761868889;
var v1184 = 467134658;
var v1185 = 856907454;
var v1186 = 470700117;
var v1187 = 680638596;
var v1188 = 864875628;
var v1189 = 964392430;
var v1190 = 724029628;
var v1191 = 853882952;
var v1192 = 938972645;
var v1193 = 1010723825;
var v1194 = 75683512;
var v1195 = 361786509;
var v1196 = 351229797;
var v1197 = 810967841;
var v1198 = 887062116;
var v1199 = 808576797;
var v1200 = 1051025664;
var v1201 = 262744918;
var v1202 = 322463044;
var v1203 = 710661161;
var v1204 = 92996956;
var v1205 = 741767877;
var v1206 = 444274680;
var v1207 = 872292503;
var v1208 = 37525464;
var v1209 = 614883996;
var v1210 = 290014392;
var v1211 = 361393684;
var v1212 = 920101486;
var v1213 = 9636647;
var v1214 = 446868738;
var v1215 = 513011661;
var v1216 = 349826601;
var v1217 = 776670101;
var v1218 = 516029206;
var v1219 = 13699146;
var v1220 = 861608536;
var v1221 = 383993420;
var v1222 = 64907264;
var v1223 = 317244132;
var v1224 = 190942564;
var v1225 = 434099377;
var v1226 = 127449960;
var v1227 = 99157085;
var v1228 = 189148482;
var v1229 = 196058316;
var v1230 = 722572104;
var v1231 = 562346174;
var v1232 = 451236870;
var v1233 = 47003570;
var v1234 = 83162845;
var v1235 = 267376424;
var v1236 = 707061594;
var v1237 = 1025286614;
var v1238 = 514535792;
var v1239 = 278855460;
var v1240 = 632182381;
var v1241 = 88664761;
var v1242 = 44643049;
var v1243 = 195553839;
var v1244 = 1070611923;
var v1245 = 861324815;
var v1246 = 80870858;
var v1247 = 519589688;
var v1248 = 188089896;
var v1249 = 352460623;
var v1250 = 105594745;
var v1251 = 753844572;
var v1252 = 974359235;
var v1253 = 876359071;
var v1254 = 621336758;
var v1255 = 679302555;
var v1256 = 79996020;
var v1257 = 807799379;
var v1258 = 356980899;
var v1259 = 877585688;
var v1260 = 1010746659;
var v1261 = 462197776;
var v1262 = 95580116;
var v1263 = 451617625;
var v1264 = 672445372;
var v1265 = 440740235;
var v1266 = 361145476;
var v1267 = 478491678;
var v1268 = 289518453;
var v1269 = 50092043;
var v1270 = 58221567;
var v1271 = 138937871;
var v1272 = 772428110;
var v1273 = 939945370;
var v1274 = 466177064;
var v1275 = 183401276;
var v1276 = 199844630;
var v1277 = 213440465;
var v1278 = 788728877;
var v1279 = 685710305;
var v1280 = 113410957;
var v1281 = 914587125;
var v1282 = 152648394;
var v1283 = 390960709;
var v1284 = 152346583;
var v1285 = 254841787;
var v1286 = 622887240;
var v1287 = 707558506;
var v1288 = 976298911;
var v1289 = 703110642;
var v1290 = 262633241;
var v1291 = 57188413;
var v1292 = 620503429;
var v1293 = 954695993;
var v1294 = 19027389;
var v1295 = 409895449;
var v1296 = 267771878;
var v1297 = 751855485;
var v1298 = 264972374;
var v1299 = 248166244;
var v1300 = 438289749;
var v1301 = 99275434;
var v1302 = 405308235;
var v1303 = 239522933;
var v1304 = 277186860;
var v1305 = 894302340;
var v1306 = 448035185;
var v1307 = 24693630;
var v1308 = 268799527;
var v1309 = 754571292;
var v1310 = 611979467;
var v1311 = 574375971;
var v1312 = 364920831;
var v1313 = 55583892;
var v1314 = 371660386;
var v1315 = 501918540;
var v1316 = 345611593;
var v1317 = 455617750;
var v1318 = 548817962;
var v1319 = 568052496;
var v1320 = 692544597;
var v1321 = 419284568;
var v1322 = 523951794;
var v1323 = 1045314573;
var v1324 = 762621178;
var v1325 = 664318371;
var v1326 = 764885334;
var v1327 = 441885825;
var v1328 = 552063878;
var v1329 = 557832668;
var v1330 = 684164750;
var v1331 = 402888516;
var v1332 = 709962195;
var v1333 = 19787093;
var v1334 = 749122232;
var v1335 = 889432675;
var v1336 = 462732614;
var v1337 = 130926208;
var v1338 = 48259398;
var v1339 = 391460862;
var v1340 = 290467728;
var v1341 = 345593378;
var v1342 = 336233749;
var v1343 = 929515990;
var v1344 = 310826116;
var v1345 = 54610267;
var v1346 = 315468765;
var v1347 = 566540660;
var v1348 = 557770888;
var v1349 = 543496451;
var v1350 = 807148048;
var v1351 = 596023018;
var v1352 = 1000817826;
var v1353 = 610534201;
var v1354 = 24197900;
var v1355 = 663213902;
var v1356 = 231990703;
var v1357 = 805642225;
var v1358 = 906429370;
var v1359 = 9863449;
var v1360 = 627297152;
var v1361 = 213001530;
var v1362 = 351457190;
var v1363 = 586222653;
var v1364 = 276383773;
var v1365 = 311611175;
var v1366 = 467160663;
var v1367 = 999898704;
var v1368 = 866383008;
var v1369 = 181825051;
var v1370 = 345363566;
var v1371 = 137774938;
var v1372 = 788254494;
var v1373 = 209677125;
var v1374 = 836594494;
var v1375 = 545486393;
var v1376 = 860173518;
var v1377 = 141364013;
var v1378 = 246906018;
var v1379 = 931156889;
var v1380 = 67738216;
var v1381 = 426653982;
var v1382 = 161576893;
var v1383 = 47318932;
var v1384 = 774409999;
var v1385 = 672613755;
var v1386 = 659561539;
var v1387 = 16389113;
var v1388 = 390806839;
var v1389 = 1071484589;
var v1390 = 221894934;
var v1391 = 28751145;
var v1392 = 588019839;
var v1393 = 881779797;
var v1394 = 15105504;
var v1395 = 910681681;
var v1396 = 981981384;
var v1397 = 737178733;
var v1398 = 1060794249;
var v1399 = 32120279;
var v1400 = 1064240859;
var v1401 = 19540198;
var v1402 = 361610439;
var v1403 = 1062678711;
var v1404 = 516893153;
var v1405 = 117826217;
var v1406 = 788046137;
var v1407 = 651297629;
var v1408 = 871598184;
var v1409 = 89108479;
var v1410 = 231434867;
var v1411 = 15048652;
var v1412 = 545625079;
var v1413 = 1019698294;
var v1414 = 943467486;
var v1415 = 973332113;
var v1416 = 753188826;
var v1417 = 288200283;
var v1418 = 340875593;
var v1419 = 203042828;
var v1420 = 756774180;
var v1421 = 128318162;
var v1422 = 347990532;
var v1423 = 581349097;
var v1424 = 469802202;
var v1425 = 494557678;
var v1426 = 337695670;
var v1427 = 729064960;
var v1428 = 107392230;
var v1429 = 3295107;
var v1430 = 730179634;
var v1431 = 695053572;
var v1432 = 838163853;
var v1433 = 757424196;
var v1434 = 120952280;
var v1435 = 533519007;
var v1436 = 81380307;
var v1437 = 780564686;
var v1438 = 256189101;
var v1439 = 42133002;
var v1440 = 150218383;
var v1441 = 691609510;
var v1442 = 528062503;
var v1443 = 736499708;
var v1444 = 857859493;
var v1445 = 588794436;
var v1446 = 93147769;
var v1447 = 1073083562;
var v1448 = 773935739;
var v1449 = 776465832;
var v1450 = 662541621;
var v1451 = 314375197;
var v1452 = 117633918;
var v1453 = 1065982717;
var v1454 = 1010831406;
var v1455 = 144231828;
var v1456 = 691612267;
var v1457 = 592395943;
var v1458 = 533313898;
var v1459 = 576140115;
var v1460 = 544658843;
var v1461 = 588606635;
var v1462 = 728740979;
var v1463 = 533548950;
var v1464 = 651476726;
var v1465 = 502447558;
var v1466 = 9073857;
var v1467 = 314355266;
var v1468 = 987431480;
var v1469 = 360212209;
var v1470 = 63519818;
var v1471 = 485110474;
var v1472 = 505838153;
var v1473 = 1063373511;
var v1474 = 626421945;
var v1475 = 498711796;
var v1476 = 1072423776;
var v1477 = 838551000;
var v1478 = 866572645;
var v1479 = 944185770;
var v1480 = 793939775;
var v1481 = 259299846;
var v1482 = 439507095;
var v1483 = 75146754;
var v1484 = 998013141;
var v1485 = 506925877;
var v1486 = 822630067;
var v1487 = 980949971;
var v1488 = 168269139;
var v1489 = 541635766;
var v1490 = 1023365079;
var v1491 = 154848257;
var v1492 = 854229726;
var v1493 = 630017449;
var v1494 = 412786589;
var v1495 = 260944612;
var v1496 = 276721390;
var v1497 = 504341542;
var v1498 = 688920813;
var v1499 = 337097689;
var v1500 = 61359462;
var v1501 = 45439270;
var v1502 = 778637917;
var v1503 = 745991142;
var v1504 = 1022839683;
var v1505 = 797123928;
var v1506 = 1062990571;
var v1507 = 1003847676;
var v1508 = 1064920053;
var v1509 = 877883260;
var v1510 = 166624563;
var v1511 = 664837090;
var v1512 = 24523185;
var v1513 = 571515394;
var v1514 = 456190053;
var v1515 = 679196127;
var v1516 = 372701921;
var v1517 = 718555727;
var v1518 = 872012268;
var v1519 = 117491035;
var v1520 = 396444116;
var v1521 = 665002355;
var v1522 = 215161960;
var v1523 = 352914407;
var v1524 = 445280802;
var v1525 = 507752599;
var v1526 = 174670666;
var v1527 = 616505630;
var v1528 = 820649134;
var v1529 = 606306375;
var v1530 = 900719919;
var v1531 = 555971842;
var v1532 = 649132226;
var v1533 = 203875393;
var v1534 = 192406333;
var v1535 = 142066141;
var v1536 = 973858671;
var v1537 = 930826011;
var v1538 = 1021594372;
var v1539 = 908876077;
var v1540 = 945257629;
var v1541 = 746814732;
var v1542 = 479712910;
var v1543 = 943681356;
var v1544 = 166860553;
var v1545 = 1020715485;
var v1546 = 926625241;
var v1547 = 973172726;
var v1548 = 567952989;
var v1549 = 1028016534;
var v1550 = 958143300;
var v1551 = 1011635041;
var v1552 = 765444613;
var v1553 = 741143598;
var v1554 = 693693761;
var v1555 = 874952190;
var v1556 = 17981683;
var v1557 = 82385888;
var v1558 = 537799027;
var v1559 = 6971481;
var v1560 = 368901442;
var v1561 = 656512851;
var v1562 = 891183816;
var v1563 = 116527201;
var v1564 = 78548982;
var v1565 = 908967882;
var v1566 = 900694897;
var v1567 = 283132337;
var v1568 = 203153867;
var v1569 = 63442498;
var v1570 = 814005711;
var v1571 = 736183149;
var v1572 = 186457605;
var v1573 = 208102228;
var v1574 = 556207108;
var v1575 = 244616285;
var v1576 = 930896551;
var v1577 = 212469077;
var v1578 = 570679841;
var v1579 = 181097974;
var v1580 = 65720262;
var v1581 = 377765303;
var v1582 = 186724885;
var v1583 = 971415599;
var v1584 = 14567368;
var v1585 = 694209927;
var v1586 = 407493883;
var v1587 = 416485491;
var v1588 = 574022476;
var v1589 = 800226494;
var v1590 = 641127643;
var v1591 = 791995676;
var v1592 = 698037627;
var v1593 = 833902941;
var v1594 = 554326755;
var v1595 = 376350392;
var v1596 = 477825346;
var v1597 = 237550085;
var v1598 = 300545029;
var v1599 = 621952508;
var v1600 = 531616070;
var v1601 = 1063182161;
var v1602 = 436860448;
var v1603 = 932876266;
var v1604 = 720242549;
var v1605 = 865626196;
var v1606 = 1060166781;
var v1607 = 796308387;
var v1608 = 446646814;
var v1609 = 674071221;
var v1610 = 850222921;
var v1611 = 196522276;
var v1612 = 803722696;
var v1613 = 531124746;
var v1614 = 575774857;
var v1615 = 860441062;
var v1616 = 681299699;
var v1617 = 461615648;
var v1618 = 287712297;
var v1619 = 1000854448;
var v1620 = 639940291;
var v1621 = 301715790;
var v1622 = 100179202;
var v1623 = 281182774;
var v1624 = 738594867;
var v1625 = 420622822;
var v1626 = 864056845;
var v1627 = 1016499917;
var v1628 = 77897857;
var v1629 = 172030991;
var v1630 = 389130845;
var v1631 = 982406627;
var v1632 = 880165988;
var v1633 = 427794561;
var v1634 = 339244302;
var v1635 = 919741358;
var v1636 = 618490370;
var v1637 = 730232894;
var v1638 = 759278132;
var v1639 = 839069835;
var v1640 = 781424663;
var v1641 = 214610366;
var v1642 = 1012138176;
var v1643 = 987343837;
var v1644 = 129914678;
var v1645 = 429328975;
var v1646 = 241816632;
var v1647 = 521874290;
var v1648 = 691810296;
var v1649 = 275889312;
var v1650 = 412483994;
var v1651 = 337769448;
var v1652 = 871153360;
var v1653 = 814669072;
var v1654 = 846824420;
var v1655 = 5845506;
var v1656 = 599096776;
var v1657 = 15718710;
var v1658 = 65411941;
var v1659 = 357119606;
var v1660 = 292287027;
var v1661 = 265337379;
var v1662 = 195592171;
var v1663 = 174379546;
var v1664 = 86948459;
var v1665 = 348538951;
var v1666 = 566247291;
var v1667 = 374222669;
var v1668 = 409267270;
var v1669 = 795768773;
var v1670 = 358561453;
var v1671 = 366063625;
var v1672 = 282099588;
var v1673 = 443602053;
var v1674 = 248110252;
var v1675 = 1000399059;
var v1676 = 322012877;
var v1677 = 177274725;
var v1678 = 162236185;
var v1679 = 622997513;
var v1680 = 717950861;
var v1681 = 870078112;
var v1682 = 92207349;
var v1683 = 955432867;
var v1684 = 1059807914;
var v1685 = 1048985826;
var v1686 = 619931936;
var v1687 = 503038540;
var v1688 = 898306345;
var v1689 = 980817213;
var v1690 = 841381331;
var v1691 = 241095187;
var v1692 = 1045725112;
var v1693 = 1559231;
var v1694 = 864630333;
var v1695 = 399708767;
var v1696 = 1013277428;
var v1697 = 643821635;
var v1698 = 508271181;
var v1699 = 464819340;
var v1700 = 544054651;
var v1701 = 275775831;
var v1702 = 728551323;
var v1703 = 797990920;
var v1704 = 689409065;
var v1705 = 800037836;
var v1706 = 81804059;
var v1707 = 462540075;
var v1708 = 148278030;
var v1709 = 766229687;
var v1710 = 668385015;
var v1711 = 719130635;
var v1712 = 507768710;
var v1713 = 738960767;
var v1714 = 484644875;
var v1715 = 668346146;
var v1716 = 594671077;
var v1717 = 995359560;
var v1718 = 964842836;
var v1719 = 687406654;
var v1720 = 557700200;
var v1721 = 517490600;
var v1722 = 481004168;
var v1723 = 457139516;
var v1724 = 370121793;
var v1725 = 354777529;
var v1726 = 945573797;
var v1727 = 514584212;
var v1728 = 1064102913;
var v1729 = 87036090;
var v1730 = 745254537;
var v1731 = 357713783;
var v1732 = 636636171;
var v1733 = 76304907;
var v1734 = 780147675;
var v1735 = 520166337;
var v1736 = 691223732;
var v1737 = 736626086;
var v1738 = 620605238;
var v1739 = 455194548;
var v1740 = 562122593;
var v1741 = 191744619;
var v1742 = 708255071;
var v1743 = 95106107;
var v1744 = 633157171;
var v1745 = 502924628;
var v1746 = 398298050;
var v1747 = 21718857;
var v1748 = 56396643;
var v1749 = 869417898;
var v1750 = 884742795;
var v1751 = 876936761;
var v1752 = 119673799;
var v1753 = 273267642;
var v1754 = 239809292;
var v1755 = 662445556;
var v1756 = 334562583;
var v1757 = 257842259;
var v1758 = 146028836;
var v1759 = 1051829170;
var v1760 = 462563112;
var v1761 = 265320540;
var v1762 = 565876634;
var v1763 = 243390220;
var v1764 = 57080606;
var v1765 = 564494095;
var v1766 = 623852063;
var v1767 = 526575873;
var v1768 = 825122113;
var v1769 = 106706888;
var v1770 = 114448121;
var v1771 = 173260655;
var v1772 = 1009166067;
var v1773 = 14139457;
var v1774 = 830417288;
var v1775 = 502093162;
var v1776 = 91798061;
var v1777 = 107886102;
var v1778 = 419736097;
var v1779 = 385894231;
var v1780 = 337951017;
var v1781 = 7465141;
var v1782 = 53964635;
var v1783 = 290565549;
var v1784 = 592209873;
var v1785 = 305271520;
var v1786 = 595378212;
var v1787 = 81512673;
var v1788 = 502505605;
var v1789 = 817433749;
var v1790 = 757194738;
var v1791 = 1041669789;
var v1792 = 973693690;
var v1793 = 727410657;
var v1794 = 975884883;
var v1795 = 392930840;
var v1796 = 264585725;
var v1797 = 852514053;
var v1798 = 834016785;
var v1799 = 76984595;
var v1800 = 717790589;
var v1801 = 916231209;
var v1802 = 978446514;
var v1803 = 642911249;
var v1804 = 765687466;
var v1805 = 342376631;
var v1806 = 923484612;
var v1807 = 788875441;
var v1808 = 226926292;
var v1809 = 821632691;
var v1810 = 275200778;
var v1811 = 828692298;
var v1812 = 407592348;
var v1813 = 359895799;
var v1814 = 787562609;
var v1815 = 688064736;
var v1816 = 328702712;
var v1817 = 581748345;
var v1818 = 594615681;
var v1819 = 39778267;
var v1820 = 859931437;
var v1821 = 611342257;
var v1822 = 315699451;
var v1823 = 349738796;
var v1824 = 650455777;
var v1825 = 465584888;
var v1826 = 237191477;
var v1827 = 157458111;
var v1828 = 400867168;
var v1829 = 662201023;
var v1830 = 366705358;
var v1831 = 922837425;
var v1832 = 745403864;
var v1833 = 409519867;
var v1834 = 830119276;
var v1835 = 705083594;
var v1836 = 259830744;
var v1837 = 415678386;
var v1838 = 1042370335;
var v1839 = 55868742;
var v1840 = 1012680699;
var v1841 = 750826601;
var v1842 = 204182331;
var v1843 = 396881981;
var v1844 = 488899349;
var v1845 = 547357603;
var v1846 = 666956267;
var v1847 = 17552314;
var v1848 = 282025635;
var v1849 = 500159268;
var v1850 = 366468445;
var v1851 = 1011849468;
var v1852 = 516744361;
var v1853 = 863348568;
var v1854 = 273262937;
var v1855 = 405332708;
var v1856 = 180522534;
var v1857 = 133300104;
var v1858 = 563229113;
var v1859 = 33073677;
var v1860 = 626438078;
var v1861 = 198773268;
var v1862 = 522746292;
var v1863 = 424313597;
var v1864 = 234627148;
var v1865 = 781682665;
var v1866 = 926627622;
var v1867 = 375696083;
var v1868 = 126649124;
var v1869 = 914728143;
var v1870 = 235529838;
var v1871 = 131114532;
var v1872 = 1045599733;
var v1873 = 82198262;
var v1874 = 48341690;
var v1875 = 972055517;
var v1876 = 802031952;
var v1877 = 660976260;
var v1878 = 124422537;
var v1879 = 328961532;
var v1880 = 687816383;
var v1881 = 899288320;
var v1882 = 33196940;
var v1883 = 832152686;
var v1884 = 859544094;
var v1885 = 437037545;
var v1886 = 794790338;
var v1887 = 70764570;
var v1888 = 944167855;
var v1889 = 15366673;
var v1890 = 762719813;
var v1891 = 169571158;
var v1892 = 1044221141;
var v1893 = 222980575;
var v1894 = 639815055;
var v1895 = 567884873;
var v1896 = 839691450;
var v1897 = 672349742;
var v1898 = 173753847;
var v1899 = 404459354;
var v1900 = 71679630;
var v1901 = 465406067;
var v1902 = 662640994;
var v1903 = 907641431;
var v1904 = 914601637;
var v1905 = 260193533;
var v1906 = 853627929;
var v1907 = 598089701;
var v1908 = 107209233;
var v1909 = 118437054;
var v1910 = 854210835;
var v1911 = 880731328;
var v1912 = 914591006;
var v1913 = 402733930;
var v1914 = 896720941;
var v1915 = 871148688;
var v1916 = 187843918;
var v1917 = 641704714;
var v1918 = 749013938;
var v1919 = 1066025935;
var v1920 = 441596916;
var v1921 = 111387706;
var v1922 = 776498849;
var v1923 = 270916588;
var v1924 = 876496484;
var v1925 = 685013479;
var v1926 = 203357960;
var v1927 = 864381608;
var v1928 = 657321939;
var v1929 = 133000928;
var v1930 = 169517991;
var v1931 = 604638228;
var v1932 = 721778568;
var v1933 = 805748991;
var v1934 = 820108316;
var v1935 = 880075314;
var v1936 = 796653816;
var v1937 = 794193357;
var v1938 = 295738709;
var v1939 = 469822195;
var v1940 = 323554018;
var v1941 = 204669820;
var v1942 = 22587137;
var v1943 = 728304086;
var v1944 = 28865535;
var v1945 = 511851520;
var v1946 = 617395362;
var v1947 = 269582304;
var v1948 = 3178723;
var v1949 = 104135654;
var v1950 = 608497068;
var v1951 = 265333091;
var v1952 = 890920255;
var v1953 = 725104621;
var v1954 = 1007474972;
var v1955 = 971924679;
var v1956 = 405013370;
var v1957 = 67915102;
var v1958 = 624896461;
var v1959 = 474988417;
var v1960 = 263182247;
var v1961 = 205341882;
var v1962 = 646092129;
var v1963 = 270218010;
var v1964 = 540871152;
var v1965 = 125392411;
var v1966 = 821698414;
var v1967 = 479591217;
var v1968 = 478810339;
var v1969 = 601961731;
var v1970 = 586541242;
var v1971 = 169173499;
var v1972 = 378438999;
var v1973 = 299645384;
var v1974 = 72574103;
var v1975 = 132572669;
var v1976 = 926218982;
var v1977 = 479563466;
var v1978 = 240259040;
var v1979 = 752607505;
var v1980 = 873018896;
var v1981 = 823118433;
var v1982 = 352627186;
var v1983 = 649570066;
var v1984 = 880273383;
var v1985 = 231009466;
var v1986 = 178062500;
var v1987 = 624045311;
var v1988 = 739443325;
var v1989 = 369335879;
var v1990 = 659114432;
var v1991 = 332788920;
var v1992 = 270452783;
var v1993 = 332578149;
var v1994 = 123794385;
var v1995 = 210126847;
var v1996 = 997045656;
var v1997 = 655610040;
var v1998 = 799604525;
var v1999 = 384803481;
var v2000 = 642173687;
var v2001 = 1029390201;
var v2002 = 658945831;
var v2003 = 531255620;
var v2004 = 489535129;
var v2005 = 1022866291;
var v2006 = 470799379;
var v2007 = 197876566;
var v2008 = 166144212;
var v2009 = 476257813;
var v2010 = 493145486;
var v2011 = 493568402;
var v2012 = 912249383;
var v2013 = 606159703;
var v2014 = 873551872;
var v2015 = 943500314;
var v2016 = 267721793;
var v2017 = 47634595;
var v2018 = 366287353;
var v2019 = 777877633;
var v2020 = 53763211;
var v2021 = 928526066;
var v2022 = 884292528;
var v2023 = 810726743;
var v2024 = 993560754;
var v2025 = 440738426;
var v2026 = 606052774;
var v2027 = 66843313;
var v2028 = 151882143;
var v2029 = 251871168;
var v2030 = 148586990;
var v2031 = 361836435;
var v2032 = 542488544;
var v2033 = 732686392;
var v2034 = 163434011;
var v2035 = 763290732;
var v2036 = 544294723;
var v2037 = 524898227;
var v2038 = 161143799;
var v2039 = 906767388;
var v2040 = 385046279;
var v2041 = 471750594;
var v2042 = 399319273;
var v2043 = 269428952;
var v2044 = 884603049;
var v2045 = 1043396328;
var v2046 = 617894133;
var v2047 = 169831042;
var v2048 = 959520162;
var v2049 = 121568991;
var v2050 = 227018425;
var v2051 = 1049729315;
var v2052 = 609028676;
var v2053 = 934457732;
var v2054 = 1070166128;
var v2055 = 805912710;
var v2056 = 394812985;
var v2057 = 782063673;
var v2058 = 1050032650;
var v2059 = 805340389;
var v2060 = 458601042;
var v2061 = 82132818;
var v2062 = 260558472;
var v2063 = 517658607;
var v2064 = 82457777;
var v2065 = 267477126;
var v2066 = 695305740;
var v2067 = 964508357;
var v2068 = 805664889;
var v2069 = 995257832;
var v2070 = 29304334;
var v2071 = 687822779;
var v2072 = 410151765;
var v2073 = 558763649;
var v2074 = 833059938;
var v2075 = 986737267;
var v2076 = 268952127;
var v2077 = 298640895;
var v2078 = 499381919;
var v2079 = 517916145;
var v2080 = 242576683;
var v2081 = 165597600;
var v2082 = 89274643;
var v2083 = 385215437;
var v2084 = 404439736;
var v2085 = 786030239;
var v2086 = 920717104;
var v2087 = 953448367;
var v2088 = 692917889;
var v2089 = 72788595;
var v2090 = 341697413;
var v2091 = 32800687;
var v2092 = 266370581;
var v2093 = 619537401;
var v2094 = 29518264;
var v2095 = 90979408;
var v2096 = 951015653;
var v2097 = 170436428;
var v2098 = 393271821;
var v2099 = 344254180;
var v2100 = 399734387;
var v2101 = 429794312;
var v2102 = 304733043;
var v2103 = 795187671;
var v2104 = 713112605;
var v2105 = 163231625;
var v2106 = 181818522;
var v2107 = 831071683;
var v2108 = 868649374;
var v2109 = 293228915;
var v2110 = 689925473;
var v2111 = 1063777807;
var v2112 = 737668037;
var v2113 = 738906318;
var v2114 = 557064251;
var v2115 = 878131291;
var v2116 = 5127106;
var v2117 = 872783465;
var v2118 = 620035426;
var v2119 = 792135505;
var v2120 = 143080271;
var v2121 = 415060748;
var v2122 = 756632727;
var v2123 = 130640545;
var v2124 = 488490204;
var v2125 = 576004868;
var v2126 = 828337218;
var v2127 = 676028692;
var v2128 = 987308959;
var v2129 = 179896166;
var v2130 = 559486518;
var v2131 = 738773347;
var v2132 = 335513443;
var v2133 = 564536059;
var v2134 = 555491208;
var v2135 = 531242713;
var v2136 = 931503014;
var v2137 = 828320917;
var v2138 = 165916626;
var v2139 = 861107064;
var v2140 = 506463162;
var v2141 = 595243661;
var v2142 = 349515432;
var v2143 = 330095137;
var v2144 = 196621213;
var v2145 = 861363174;
var v2146 = 198553450;
var v2147 = 871839776;
var v2148 = 882339077;
var v2149 = 589734536;
var v2150 = 500088574;
var v2151 = 655895931;
var v2152 = 314603868;
var v2153 = 301301248;
var v2154 = 148079735;
var v2155 = 184852593;
var v2156 = 350698825;
var v2157 = 931785159;
var v2158 = 894195198;
var v2159 = 645149662;
var v2160 = 1061876867;
var v2161 = 888089753;
var v2162 = 949221310;
var v2163 = 574649125;
var v2164 = 449397864;
var v2165 = 685422952;
var v2166 = 267929297;
var v2167 = 84524894;
var v2168 = 972660133;
var v2169 = 859087220;
var v2170 = 72028925;
var v2171 = 487314328;
var v2172 = 179705205;
var v2173 = 619295328;
var v2174 = 990109632;
var v2175 = 296853685;
var v2176 = 556310723;
var v2177 = 570649701;
var v2178 = 602284896;
var v2179 = 923622183;
var v2180 = 308431706;
var v2181 = 1005856997;
var v2182 = 502915587;
var v2183 = 702261075;
var v2184 = 42430607;
var v2185 = 77061368;
var v2186 = 47619843;
var v2187 = 261483418;
var v2188 = 782393896;
var v2189 = 250596203;
var v2190 = 341770338;
var v2191 = 173148321;
var v2192 = 1054870017;
var v2193 = 1059806830;
var v2194 = 696102293;
var v2195 = 153990596;
var v2196 = 126055722;
var v2197 = 117182765;
var v2198 = 854415859;
var v2199 = 294896300;
var v2200 = 389224001;
var v2201 = 317688429;
var v2202 = 724886018;
var v2203 = 660739627;
var v2204 = 401230764;
var v2205 = 185776482;
var v2206 = 991785736;
var v2207 = 785798908;
var v2208 = 117657189;
var v2209 = 504491764;
var v2210 = 889462826;
var v2211 = 198109473;
var v2212 = 153614722;
var v2213 = 705772839;
var v2214 = 819915536;
var v2215 = 186306936;
var v2216 = 1001963314;
var v2217 = 274844851;
var v2218 = 745359586;
var v2219 = 138842969;
var v2220 = 558715836;
var v2221 = 830126545;
var v2222 = 1069786006;
var v2223 = 848201899;
var v2224 = 369105091;
var v2225 = 795522557;
var v2226 = 877750919;
var v2227 = 1060917001;
var v2228 = 734102025;
var v2229 = 539103104;
var v2230 = 467235194;
var v2231 = 539772577;
var v2232 = 32982706;
var v2233 = 893929359;
var v2234 = 261314595;
var v2235 = 765050470;
var v2236 = 788321209;
var v2237 = 607181469;
var v2238 = 778380116;
var v2239 = 1041455751;
var v2240 = 3473870;
var v2241 = 460314246;
var v2242 = 316139078;
var v2243 = 660244686;
var v2244 = 623408206;
var v2245 = 365481522;
var v2246 = 926230913;
var v2247 = 524104372;
var v2248 = 692095622;
var v2249 = 147227615;
var v2250 = 403537945;
var v2251 = 314912019;
var v2252 = 1021358327;
var v2253 = 1051074307;
var v2254 = 973706521;
var v2255 = 550215758;
var v2256 = 1039513657;
var v2257 = 286052286;
var v2258 = 248921306;
var v2259 = 593934402;
var v2260 = 293722984;
var v2261 = 827569970;
var v2262 = 212639293;
var v2263 = 207121334;
var v2264 = 377649039;
var v2265 = 652713083;
var v2266 = 118442997;
var v2267 = 505047674;
var v2268 = 599292570;
var v2269 = 1034771640;
var v2270 = 169729393;
var v2271 = 212172977;
var v2272 = 995623675;
var v2273 = 587469270;
var v2274 = 770536141;
var v2275 = 668907733;
var v2276 = 844123732;
var v2277 = 1036989795;
var v2278 = 476127124;
var v2279 = 895585002;
var v2280 = 248865116;
var v2281 = 755449214;
var v2282 = 32105655;
var v2283 = 308615755;
var v2284 = 296056234;
var v2285 = 557567092;
var v2286 = 302578717;
var v2287 = 914082125;
var v2288 = 652814905;
var v2289 = 1002055510;
var v2290 = 829378926;
var v2291 = 272644146;
var v2292 = 430924865;
var v2293 = 54541396;
var v2294 = 1032123074;
var v2295 = 330314632;
var v2296 = 63767169;
var v2297 = 542622779;
var v2298 = 329045265;
var v2299 = 131787964;
var v2300 = 990712262;
var v2301 = 665836958;
var v2302 = 867364796;
var v2303 = 628622503;
var v2304 = 458122851;
var v2305 = 839978483;
var v2306 = 725782940;
