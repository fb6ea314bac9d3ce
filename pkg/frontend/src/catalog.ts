// Every user-visible chrome string lives here, in all four languages.
// The key sets are type-checked to match; tests diff them at runtime too.

export type Lang = "en" | "es" | "fr" | "ar";
export const LANGS: Lang[] = ["en", "es", "fr", "ar"];
export const RTL_LANGS: Lang[] = ["ar"];

const en = {
  "app.title": "Community Resource Hub",
  "language.label": "Language",

  "tab.resume": "Resume",
  "tab.career": "Career Services",
  "tab.mindfulness": "Mindfulness",
  "tab.translator": "Translator",
  "tab.faq": "Common Questions",
  "tab.locator": "Locator",

  "chat.title": "Helper",
  "chat.placeholder": "Type or speak your question...",
  "chat.send": "Send",
  "chat.speak": "Speak",
  "chat.listening": "Listening...",
  "chat.verified": "Verified answer",
  "chat.generated": "Assistant reply",
  "chat.unavailable": "Assistant unavailable",

  "error.offline": "Could not reach the server.",
  "error.retry": "Retry",

  "faq.heading": "Browse questions by category",
  "faqcat.Finding and Getting a Job": "Finding and Getting a Job",
  "faqcat.Relationships": "Relationships",
  "faqcat.Well-being": "Well-being",
  "faqcat.Getting Adjusted to a New Place": "Getting Adjusted to a New Place",
  "faqcat.Community Resources": "Community Resources",
  "faqcat.FitBit": "FitBit",

  "mind.heading": "Mindfulness resources",
  "mindsec.Meditation/Breathing Invitations and Exercises": "Meditation/Breathing Invitations and Exercises",
  "mindsec.Wellness": "Wellness",
  "mindsec.Breathing and Meditation": "Breathing and Meditation",
  "mindsec.Connecting with Nature": "Connecting with Nature",
  "mindsec.Education": "Education",

  "trans.phrases": "Learn common phrases",
  "trans.custom": "Translate your own text",
  "trans.sourceLang": "Translate from",
  "trans.input": "Enter a sentence or phrase...",
  "trans.submit": "Translate",
  "trans.result": "English translation",
  "trans.play": "Play",
  "phrasecat.Common Words": "Common Words",
  "phrasecat.Words for Healthy and Unhealthy Relationships": "Words for Healthy and Unhealthy Relationships",
  "phrasecat.Words for Job Search": "Words for Job Search",
  "phrasecat.Words for Emotional Well-Being": "Words for Emotional Well-Being",
  "phrasecat.Words for a Different Kind of Feeling": "Words for a Different Kind of Feeling",
  "phrasecat.Greetings": "Greetings",
  "phrasecat.Introductions": "Introductions",
  "phrasecat.General Questions and Responses": "General Questions and Responses",
  "phrasecat.Feeling and Emotional Well-Being": "Feeling and Emotional Well-Being",
  "phrasecat.Health and Well-Being": "Health and Well-Being",
  "phrasecat.School and Family": "School and Family",

  "loc.heading": "Find resources near you",
  "loc.search": "Show map",
  "loccat.affordable grocery stores": "Affordable grocery stores",
  "loccat.culturally specific grocery stores": "Culturally specific grocery stores",
  "loccat.farmers markets": "Farmers markets",
  "loccat.food pantries": "Food pantries",

  "career.heading": "Explore occupations and local services",
  "career.occupation": "Occupation",
  "career.occupation2": "Compare with",
  "career.state": "State",
  "career.city": "City",
  "career.zip": "Zip code",
  "career.radius": "Radius (miles)",
  "career.scope": "State or nationwide (US)",
  "career.run": "Search",
  "kind.american-job-center": "American Job Center",
  "kind.apprenticeship-offices": "Apprenticeship Offices",
  "kind.certifications": "Certifications",
  "kind.employment-patterns": "Employment Patterns",
  "kind.labor-market-information": "Labor Market Information",
  "kind.occupations": "Occupations",
  "kind.occupational-reports": "Occupational Reports",
  "kind.salaries-and-wages": "Salaries and Wages",
  "kind.skills-gaps": "Skills Gaps",
  "kind.state-resources": "State Resources",
  "kind.tools-and-technology": "Tools and Technology",
  "kind.training": "Training",
  "kind.unemployment": "Unemployment",
  "kind.youth-programs": "Youth Programs",

  "resume.heading": "Build your resume",
  "resume.name": "Full name",
  "resume.phone": "Phone",
  "resume.email": "Email",
  "resume.location": "Location",
  "resume.education": "Education",
  "resume.institution": "School or program",
  "resume.credential": "Certificate or degree",
  "resume.dates": "Dates",
  "resume.experience": "Work experience",
  "resume.employer": "Employer",
  "resume.jobTitle": "Job title",
  "resume.bullets": "One accomplishment per line",
  "resume.certifications": "Certifications",
  "resume.certName": "Certification name",
  "resume.issuer": "Issued by",
  "resume.date": "Date",
  "resume.skills": "Skills (comma separated)",
  "resume.addEducation": "Add education",
  "resume.addExperience": "Add experience",
  "resume.addCertification": "Add certification",
  "resume.build": "Generate PDF",
  "resume.built": "Your resume is ready and downloading.",

  "interview.heading": "Practice interviewing",
  "interview.pick": "Choose a question",
  "interview.start": "Start practice",
  "interview.answer": "Say or type your answer...",
  "interview.submit": "Submit answer",
  "interview.end": "Finish and get summary",
  "interview.clarity": "Clarity",
  "interview.confidence": "Confidence",
  "interview.completeness": "Completeness",
  "interview.summary": "Session summary",
};

type Catalog = Record<keyof typeof en, string>;

const es: Catalog = {
  "app.title": "Centro de Recursos Comunitarios",
  "language.label": "Idioma",

  "tab.resume": "Currículum",
  "tab.career": "Servicios de Carrera",
  "tab.mindfulness": "Bienestar",
  "tab.translator": "Traductor",
  "tab.faq": "Preguntas Comunes",
  "tab.locator": "Localizador",

  "chat.title": "Asistente",
  "chat.placeholder": "Escriba o diga su pregunta...",
  "chat.send": "Enviar",
  "chat.speak": "Hablar",
  "chat.listening": "Escuchando...",
  "chat.verified": "Respuesta verificada",
  "chat.generated": "Respuesta del asistente",
  "chat.unavailable": "Asistente no disponible",

  "error.offline": "No se pudo conectar con el servidor.",
  "error.retry": "Reintentar",

  "faq.heading": "Explore preguntas por categoría",
  "faqcat.Finding and Getting a Job": "Encontrar y Conseguir Trabajo",
  "faqcat.Relationships": "Relaciones",
  "faqcat.Well-being": "Bienestar",
  "faqcat.Getting Adjusted to a New Place": "Adaptarse a un Nuevo Lugar",
  "faqcat.Community Resources": "Recursos Comunitarios",
  "faqcat.FitBit": "FitBit",

  "mind.heading": "Recursos de bienestar",
  "mindsec.Meditation/Breathing Invitations and Exercises": "Invitaciones y Ejercicios de Meditación/Respiración",
  "mindsec.Wellness": "Bienestar",
  "mindsec.Breathing and Meditation": "Respiración y Meditación",
  "mindsec.Connecting with Nature": "Conexión con la Naturaleza",
  "mindsec.Education": "Educación",

  "trans.phrases": "Aprenda frases comunes",
  "trans.custom": "Traduzca su propio texto",
  "trans.sourceLang": "Traducir desde",
  "trans.input": "Escriba una oración o frase...",
  "trans.submit": "Traducir",
  "trans.result": "Traducción al inglés",
  "trans.play": "Reproducir",
  "phrasecat.Common Words": "Palabras Comunes",
  "phrasecat.Words for Healthy and Unhealthy Relationships": "Palabras sobre Relaciones Sanas y No Sanas",
  "phrasecat.Words for Job Search": "Palabras para Buscar Trabajo",
  "phrasecat.Words for Emotional Well-Being": "Palabras de Bienestar Emocional",
  "phrasecat.Words for a Different Kind of Feeling": "Palabras para Otros Sentimientos",
  "phrasecat.Greetings": "Saludos",
  "phrasecat.Introductions": "Presentaciones",
  "phrasecat.General Questions and Responses": "Preguntas y Respuestas Generales",
  "phrasecat.Feeling and Emotional Well-Being": "Sentimientos y Bienestar Emocional",
  "phrasecat.Health and Well-Being": "Salud y Bienestar",
  "phrasecat.School and Family": "Escuela y Familia",

  "loc.heading": "Encuentre recursos cerca de usted",
  "loc.search": "Mostrar mapa",
  "loccat.affordable grocery stores": "Supermercados económicos",
  "loccat.culturally specific grocery stores": "Tiendas de alimentos culturales",
  "loccat.farmers markets": "Mercados de agricultores",
  "loccat.food pantries": "Despensas de alimentos",

  "career.heading": "Explore ocupaciones y servicios locales",
  "career.occupation": "Ocupación",
  "career.occupation2": "Comparar con",
  "career.state": "Estado",
  "career.city": "Ciudad",
  "career.zip": "Código postal",
  "career.radius": "Radio (millas)",
  "career.scope": "Estado o nacional (US)",
  "career.run": "Buscar",
  "kind.american-job-center": "Centro de Empleo Americano",
  "kind.apprenticeship-offices": "Oficinas de Aprendizaje",
  "kind.certifications": "Certificaciones",
  "kind.employment-patterns": "Patrones de Empleo",
  "kind.labor-market-information": "Información del Mercado Laboral",
  "kind.occupations": "Ocupaciones",
  "kind.occupational-reports": "Informes Ocupacionales",
  "kind.salaries-and-wages": "Salarios y Sueldos",
  "kind.skills-gaps": "Brechas de Habilidades",
  "kind.state-resources": "Recursos Estatales",
  "kind.tools-and-technology": "Herramientas y Tecnología",
  "kind.training": "Capacitación",
  "kind.unemployment": "Desempleo",
  "kind.youth-programs": "Programas Juveniles",

  "resume.heading": "Cree su currículum",
  "resume.name": "Nombre completo",
  "resume.phone": "Teléfono",
  "resume.email": "Correo electrónico",
  "resume.location": "Ubicación",
  "resume.education": "Educación",
  "resume.institution": "Escuela o programa",
  "resume.credential": "Certificado o título",
  "resume.dates": "Fechas",
  "resume.experience": "Experiencia laboral",
  "resume.employer": "Empleador",
  "resume.jobTitle": "Puesto",
  "resume.bullets": "Un logro por línea",
  "resume.certifications": "Certificaciones",
  "resume.certName": "Nombre de la certificación",
  "resume.issuer": "Emitida por",
  "resume.date": "Fecha",
  "resume.skills": "Habilidades (separadas por comas)",
  "resume.addEducation": "Agregar educación",
  "resume.addExperience": "Agregar experiencia",
  "resume.addCertification": "Agregar certificación",
  "resume.build": "Generar PDF",
  "resume.built": "Su currículum está listo y descargándose.",

  "interview.heading": "Practique entrevistas",
  "interview.pick": "Elija una pregunta",
  "interview.start": "Comenzar práctica",
  "interview.answer": "Diga o escriba su respuesta...",
  "interview.submit": "Enviar respuesta",
  "interview.end": "Terminar y ver resumen",
  "interview.clarity": "Claridad",
  "interview.confidence": "Confianza",
  "interview.completeness": "Integridad",
  "interview.summary": "Resumen de la sesión",
};

const fr: Catalog = {
  "app.title": "Centre de Ressources Communautaires",
  "language.label": "Langue",

  "tab.resume": "CV",
  "tab.career": "Services de Carrière",
  "tab.mindfulness": "Pleine Conscience",
  "tab.translator": "Traducteur",
  "tab.faq": "Questions Courantes",
  "tab.locator": "Localisateur",

  "chat.title": "Assistant",
  "chat.placeholder": "Écrivez ou dites votre question...",
  "chat.send": "Envoyer",
  "chat.speak": "Parler",
  "chat.listening": "Écoute en cours...",
  "chat.verified": "Réponse vérifiée",
  "chat.generated": "Réponse de l'assistant",
  "chat.unavailable": "Assistant indisponible",

  "error.offline": "Impossible de joindre le serveur.",
  "error.retry": "Réessayer",

  "faq.heading": "Parcourir les questions par catégorie",
  "faqcat.Finding and Getting a Job": "Trouver et Obtenir un Emploi",
  "faqcat.Relationships": "Relations",
  "faqcat.Well-being": "Bien-être",
  "faqcat.Getting Adjusted to a New Place": "S'adapter à un Nouveau Lieu",
  "faqcat.Community Resources": "Ressources Communautaires",
  "faqcat.FitBit": "FitBit",

  "mind.heading": "Ressources de pleine conscience",
  "mindsec.Meditation/Breathing Invitations and Exercises": "Invitations et Exercices de Méditation/Respiration",
  "mindsec.Wellness": "Bien-être",
  "mindsec.Breathing and Meditation": "Respiration et Méditation",
  "mindsec.Connecting with Nature": "Connexion avec la Nature",
  "mindsec.Education": "Éducation",

  "trans.phrases": "Apprenez des phrases courantes",
  "trans.custom": "Traduisez votre propre texte",
  "trans.sourceLang": "Traduire depuis",
  "trans.input": "Saisissez une phrase...",
  "trans.submit": "Traduire",
  "trans.result": "Traduction en anglais",
  "trans.play": "Écouter",
  "phrasecat.Common Words": "Mots Courants",
  "phrasecat.Words for Healthy and Unhealthy Relationships": "Mots sur les Relations Saines et Malsaines",
  "phrasecat.Words for Job Search": "Mots pour la Recherche d'Emploi",
  "phrasecat.Words for Emotional Well-Being": "Mots du Bien-être Émotionnel",
  "phrasecat.Words for a Different Kind of Feeling": "Mots pour d'Autres Sentiments",
  "phrasecat.Greetings": "Salutations",
  "phrasecat.Introductions": "Présentations",
  "phrasecat.General Questions and Responses": "Questions et Réponses Générales",
  "phrasecat.Feeling and Emotional Well-Being": "Sentiments et Bien-être Émotionnel",
  "phrasecat.Health and Well-Being": "Santé et Bien-être",
  "phrasecat.School and Family": "École et Famille",

  "loc.heading": "Trouvez des ressources près de chez vous",
  "loc.search": "Afficher la carte",
  "loccat.affordable grocery stores": "Épiceries abordables",
  "loccat.culturally specific grocery stores": "Épiceries culturelles",
  "loccat.farmers markets": "Marchés fermiers",
  "loccat.food pantries": "Banques alimentaires",

  "career.heading": "Explorez les métiers et services locaux",
  "career.occupation": "Métier",
  "career.occupation2": "Comparer avec",
  "career.state": "État",
  "career.city": "Ville",
  "career.zip": "Code postal",
  "career.radius": "Rayon (miles)",
  "career.scope": "État ou national (US)",
  "career.run": "Rechercher",
  "kind.american-job-center": "American Job Center",
  "kind.apprenticeship-offices": "Bureaux d'Apprentissage",
  "kind.certifications": "Certifications",
  "kind.employment-patterns": "Tendances de l'Emploi",
  "kind.labor-market-information": "Informations sur le Marché du Travail",
  "kind.occupations": "Métiers",
  "kind.occupational-reports": "Rapports Professionnels",
  "kind.salaries-and-wages": "Salaires et Rémunérations",
  "kind.skills-gaps": "Écarts de Compétences",
  "kind.state-resources": "Ressources de l'État",
  "kind.tools-and-technology": "Outils et Technologies",
  "kind.training": "Formation",
  "kind.unemployment": "Chômage",
  "kind.youth-programs": "Programmes Jeunesse",

  "resume.heading": "Créez votre CV",
  "resume.name": "Nom complet",
  "resume.phone": "Téléphone",
  "resume.email": "Courriel",
  "resume.location": "Lieu",
  "resume.education": "Formation",
  "resume.institution": "École ou programme",
  "resume.credential": "Certificat ou diplôme",
  "resume.dates": "Dates",
  "resume.experience": "Expérience professionnelle",
  "resume.employer": "Employeur",
  "resume.jobTitle": "Poste",
  "resume.bullets": "Une réalisation par ligne",
  "resume.certifications": "Certifications",
  "resume.certName": "Nom de la certification",
  "resume.issuer": "Délivrée par",
  "resume.date": "Date",
  "resume.skills": "Compétences (séparées par des virgules)",
  "resume.addEducation": "Ajouter une formation",
  "resume.addExperience": "Ajouter une expérience",
  "resume.addCertification": "Ajouter une certification",
  "resume.build": "Générer le PDF",
  "resume.built": "Votre CV est prêt et en cours de téléchargement.",

  "interview.heading": "Entraînez-vous aux entretiens",
  "interview.pick": "Choisissez une question",
  "interview.start": "Commencer",
  "interview.answer": "Dites ou écrivez votre réponse...",
  "interview.submit": "Envoyer la réponse",
  "interview.end": "Terminer et voir le résumé",
  "interview.clarity": "Clarté",
  "interview.confidence": "Assurance",
  "interview.completeness": "Exhaustivité",
  "interview.summary": "Résumé de la séance",
};

const ar: Catalog = {
  "app.title": "مركز الموارد المجتمعية",
  "language.label": "اللغة",

  "tab.resume": "السيرة الذاتية",
  "tab.career": "الخدمات المهنية",
  "tab.mindfulness": "اليقظة الذهنية",
  "tab.translator": "المترجم",
  "tab.faq": "الأسئلة الشائعة",
  "tab.locator": "محدد المواقع",

  "chat.title": "المساعد",
  "chat.placeholder": "اكتب سؤالك أو قله بصوتك...",
  "chat.send": "إرسال",
  "chat.speak": "تحدث",
  "chat.listening": "جارٍ الاستماع...",
  "chat.verified": "إجابة موثقة",
  "chat.generated": "رد المساعد",
  "chat.unavailable": "المساعد غير متاح",

  "error.offline": "تعذر الوصول إلى الخادم.",
  "error.retry": "إعادة المحاولة",

  "faq.heading": "تصفح الأسئلة حسب الفئة",
  "faqcat.Finding and Getting a Job": "البحث عن عمل والحصول عليه",
  "faqcat.Relationships": "العلاقات",
  "faqcat.Well-being": "الرفاهية",
  "faqcat.Getting Adjusted to a New Place": "التأقلم مع مكان جديد",
  "faqcat.Community Resources": "الموارد المجتمعية",
  "faqcat.FitBit": "FitBit",

  "mind.heading": "موارد اليقظة الذهنية",
  "mindsec.Meditation/Breathing Invitations and Exercises": "دعوات وتمارين التأمل والتنفس",
  "mindsec.Wellness": "العافية",
  "mindsec.Breathing and Meditation": "التنفس والتأمل",
  "mindsec.Connecting with Nature": "التواصل مع الطبيعة",
  "mindsec.Education": "التثقيف",

  "trans.phrases": "تعلم عبارات شائعة",
  "trans.custom": "ترجم نصك الخاص",
  "trans.sourceLang": "الترجمة من",
  "trans.input": "أدخل جملة أو عبارة...",
  "trans.submit": "ترجم",
  "trans.result": "الترجمة إلى الإنجليزية",
  "trans.play": "تشغيل",
  "phrasecat.Common Words": "كلمات شائعة",
  "phrasecat.Words for Healthy and Unhealthy Relationships": "كلمات عن العلاقات الصحية وغير الصحية",
  "phrasecat.Words for Job Search": "كلمات للبحث عن عمل",
  "phrasecat.Words for Emotional Well-Being": "كلمات للرفاه العاطفي",
  "phrasecat.Words for a Different Kind of Feeling": "كلمات لمشاعر مختلفة",
  "phrasecat.Greetings": "التحيات",
  "phrasecat.Introductions": "التعارف",
  "phrasecat.General Questions and Responses": "أسئلة وإجابات عامة",
  "phrasecat.Feeling and Emotional Well-Being": "المشاعر والرفاه العاطفي",
  "phrasecat.Health and Well-Being": "الصحة والعافية",
  "phrasecat.School and Family": "المدرسة والعائلة",

  "loc.heading": "اعثر على الموارد القريبة منك",
  "loc.search": "عرض الخريطة",
  "loccat.affordable grocery stores": "متاجر بقالة بأسعار مناسبة",
  "loccat.culturally specific grocery stores": "متاجر بقالة ثقافية",
  "loccat.farmers markets": "أسواق المزارعين",
  "loccat.food pantries": "مخازن الطعام",

  "career.heading": "استكشف المهن والخدمات المحلية",
  "career.occupation": "المهنة",
  "career.occupation2": "قارن مع",
  "career.state": "الولاية",
  "career.city": "المدينة",
  "career.zip": "الرمز البريدي",
  "career.radius": "نصف القطر (أميال)",
  "career.scope": "الولاية أو وطني (US)",
  "career.run": "بحث",
  "kind.american-job-center": "مركز التوظيف الأمريكي",
  "kind.apprenticeship-offices": "مكاتب التدريب المهني",
  "kind.certifications": "الشهادات",
  "kind.employment-patterns": "أنماط التوظيف",
  "kind.labor-market-information": "معلومات سوق العمل",
  "kind.occupations": "المهن",
  "kind.occupational-reports": "التقارير المهنية",
  "kind.salaries-and-wages": "الرواتب والأجور",
  "kind.skills-gaps": "فجوات المهارات",
  "kind.state-resources": "موارد الولاية",
  "kind.tools-and-technology": "الأدوات والتقنيات",
  "kind.training": "التدريب",
  "kind.unemployment": "البطالة",
  "kind.youth-programs": "برامج الشباب",

  "resume.heading": "أنشئ سيرتك الذاتية",
  "resume.name": "الاسم الكامل",
  "resume.phone": "الهاتف",
  "resume.email": "البريد الإلكتروني",
  "resume.location": "الموقع",
  "resume.education": "التعليم",
  "resume.institution": "المدرسة أو البرنامج",
  "resume.credential": "الشهادة أو الدرجة",
  "resume.dates": "التواريخ",
  "resume.experience": "الخبرة العملية",
  "resume.employer": "جهة العمل",
  "resume.jobTitle": "المسمى الوظيفي",
  "resume.bullets": "إنجاز واحد في كل سطر",
  "resume.certifications": "الشهادات المهنية",
  "resume.certName": "اسم الشهادة",
  "resume.issuer": "جهة الإصدار",
  "resume.date": "التاريخ",
  "resume.skills": "المهارات (مفصولة بفواصل)",
  "resume.addEducation": "إضافة تعليم",
  "resume.addExperience": "إضافة خبرة",
  "resume.addCertification": "إضافة شهادة",
  "resume.build": "إنشاء PDF",
  "resume.built": "سيرتك الذاتية جاهزة ويجري تنزيلها.",

  "interview.heading": "تدرب على المقابلات",
  "interview.pick": "اختر سؤالاً",
  "interview.start": "ابدأ التدريب",
  "interview.answer": "قل إجابتك أو اكتبها...",
  "interview.submit": "إرسال الإجابة",
  "interview.end": "إنهاء وعرض الملخص",
  "interview.clarity": "الوضوح",
  "interview.confidence": "الثقة",
  "interview.completeness": "الاكتمال",
  "interview.summary": "ملخص الجلسة",
};

export type MessageKey = keyof typeof en;
export const MESSAGES: Record<Lang, Catalog> = { en, es, fr, ar };
